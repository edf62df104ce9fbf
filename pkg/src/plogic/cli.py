"""Command line interface.

Commands: parse, table, check, relate, transform, prove, verify.
Formulas are given inline in either dialect, or as ``@path`` to read a
file.  Exit codes: 0 success, 2 parse/usage error, 3 semantic
precondition failure, 4 proof rejection.
"""

from __future__ import annotations

import argparse
import enum
import json
import sys
from pathlib import Path as FsPath

from .errors import (
    LogicError,
    NotATautology,
    NotUpdownRoot,
    NotXorRoot,
    ParseError,
    PathError,
    ProofTooLarge,
    TooManyAtoms,
)
from .formula import Formula, Language, language_of, atoms_of, path_from_str, path_to_str
from .parser import Dialect, parse, render
from .semantics import (
    ATOM_LIMIT,
    evaluate,
    assignments,
    is_parallel,
    is_perpendicular,
    table_labels,
    truth_table,
)
from .transforms import (
    EncryptionTrace,
    desugar,
    psi_apply,
    psi_invert,
    upsilon_decrypt,
    upsilon_encrypt,
)
from .proof import check_proof, load_proof, proof_to_json, proof_to_text
from .proof.prover import prove_main_results, prove_tautology

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_REJECTED = 4


class OutputFormat(enum.Enum):
    TEXT = "text"
    JSON = "json"


def _format(args) -> OutputFormat:
    return OutputFormat.JSON if args.json else OutputFormat.TEXT


_SEMANTIC_ERRORS = (
    TooManyAtoms,
    NotXorRoot,
    NotUpdownRoot,
    PathError,
    NotATautology,
    ProofTooLarge,
)


def _read_formula_arg(text: str) -> Formula:
    if text.startswith("@"):
        text = FsPath(text[1:]).read_text(encoding="utf-8")
    return parse(text)


def _dialect(args) -> Dialect:
    return Dialect.UNICODE if args.unicode else Dialect.ASCII


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def cmd_parse(args) -> int:
    f = _read_formula_arg(args.formula)
    if _format(args) is OutputFormat.JSON:
        _emit_json(
            {
                "formula": render(f, _dialect(args)),
                "language": language_of(f).value,
                "atoms": atoms_of(f),
            }
        )
    else:
        print(render(f, _dialect(args)))
    return EXIT_OK


def _table_payload(f: Formula, dialect: Dialect) -> dict:
    table = truth_table(f)
    labels = table_labels(f, dialect)
    return {
        "formula": render(f, dialect),
        "atoms": table.atom_order,
        "rows": table.rows,
        "columns": [
            {
                "path": path_to_str(col.path),
                "label": label,
                "values": col.values,
            }
            for col, label in zip(table.columns, labels)
        ],
        "final_index": table.final_index,
        "final": table.columns[table.final_index].values,
    }


def cmd_table(args) -> int:
    f = _read_formula_arg(args.formula)
    if _format(args) is OutputFormat.JSON:
        _emit_json(_table_payload(f, _dialect(args)))
        return EXIT_OK
    table = truth_table(f)
    labels = table_labels(f, _dialect(args))
    labels = [
        f"[{label}]" if i == table.final_index else label
        for i, label in enumerate(labels)
    ]
    widths = [max(len(label), 1) for label in labels]
    atom_cells = " ".join(table.atom_order)
    header = atom_cells + " | " + "  ".join(
        label.center(w) for label, w in zip(labels, widths)
    )
    print(header)
    print("-" * len(header))
    for i, row in enumerate(table.rows):
        bits = " ".join(str(row[a]) for a in table.atom_order)
        cells = "  ".join(
            str(col.values[i]).center(w) for col, w in zip(table.columns, widths)
        )
        print(bits + " | " + cells)
    print("[...] marks the final analysis column")
    return EXIT_OK


def cmd_check(args) -> int:
    f = _read_formula_arg(args.formula)
    atoms = atoms_of(f)
    if len(atoms) > ATOM_LIMIT:
        raise TooManyAtoms(len(atoms), ATOM_LIMIT)
    true_row = None
    false_row = None
    for row in assignments(atoms):
        if evaluate(f, row) == 1:
            true_row = true_row or row
        else:
            false_row = false_row or row
        if true_row and false_row:
            break
    if false_row is None:
        verdict, witnesses = "TAUTOLOGY", {}
    elif true_row is None:
        verdict, witnesses = "CONTRADICTION", {}
    else:
        verdict = "CONTINGENT"
        witnesses = {"true_at": true_row, "false_at": false_row}
    if _format(args) is OutputFormat.JSON:
        _emit_json({"formula": render(f, _dialect(args)), "verdict": verdict, **witnesses})
    else:
        print(verdict)
        for key, row in witnesses.items():
            pretty = ", ".join(f"{k}={v}" for k, v in row.items())
            print(f"  {key.replace('_', ' ')}: {{{pretty}}}")
    return EXIT_OK


def cmd_relate(args) -> int:
    a = _read_formula_arg(args.a)
    b = _read_formula_arg(args.b)
    if language_of(a) is not Language.FO_ONLY or language_of(b) is not Language.NFO_ONLY:
        print(
            "warning: relations are usually taken between a fundamental-only "
            "left side and a negated-only right side; classes here are "
            f"{language_of(a).value} / {language_of(b).value}",
            file=sys.stderr,
        )
    par = is_parallel(a, b)
    perp = is_perpendicular(a, b)
    payload: dict = {"parallel": par.holds, "perpendicular": perp.holds}
    if par.witness is not None:
        payload["parallel_witness"] = par.witness
    if perp.witness is not None:
        payload["perpendicular_witness"] = perp.witness
    if _format(args) is OutputFormat.JSON:
        _emit_json(payload)
    else:
        print(f"parallel: {str(par.holds).lower()}")
        if par.witness is not None:
            print(f"  differs at {par.witness}")
        print(f"perpendicular: {str(perp.holds).lower()}")
        if perp.witness is not None:
            print(f"  fails at {perp.witness}")
    return EXIT_OK


def _trace_to_dict(trace: EncryptionTrace) -> dict:
    return {"removed_negations": [path_to_str(p) for p in trace.removed_negations]}


def _trace_from_dict(data: dict) -> EncryptionTrace:
    return EncryptionTrace(
        tuple(path_from_str(p) for p in data["removed_negations"])
    )


def cmd_transform(args) -> int:
    f = _read_formula_arg(args.formula)
    trace_out = None
    if args.rule == "upsilon":
        result, trace = upsilon_encrypt(f)
        trace_out = _trace_to_dict(trace)
        if args.trace:
            FsPath(args.trace).write_text(
                json.dumps(trace_out, indent=2) + "\n", encoding="utf-8"
            )
    elif args.rule == "upsilon-inv":
        data = json.loads(FsPath(args.trace).read_text(encoding="utf-8"))
        result = upsilon_decrypt(f, _trace_from_dict(data))
    elif args.rule == "psi":
        result = psi_apply(f)
    elif args.rule == "psi-inv":
        result = psi_invert(f)
    else:
        result = desugar(f)
    if _format(args) is OutputFormat.JSON:
        payload = {"rule": args.rule, "formula": render(result, _dialect(args))}
        if trace_out is not None:
            payload["trace"] = trace_out
        _emit_json(payload)
    else:
        print(render(result, _dialect(args)))
    return EXIT_OK


def cmd_prove(args) -> int:
    as_json = _format(args) is OutputFormat.JSON
    serialize = proof_to_json if as_json else proof_to_text
    suffix = ".json" if as_json else ".prf"
    if args.main_results:
        outdir = FsPath(args.dir or ".")
        outdir.mkdir(parents=True, exist_ok=True)
        for tag, proof in zip("abcd", prove_main_results()):
            target = outdir / f"main-{tag}{suffix}"
            target.write_text(serialize(proof), encoding="utf-8")
            print(f"{target}: {len(proof.lines)} lines")
        return EXIT_OK
    f = _read_formula_arg(args.formula)
    proof = prove_tautology(f)
    text = serialize(proof)
    if args.out:
        FsPath(args.out).write_text(text, encoding="utf-8")
        print(f"{args.out}: {len(proof.lines)} lines")
    else:
        print(text, end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    proof = load_proof(FsPath(args.proof_file).read_text(encoding="utf-8"))
    result = check_proof(proof)
    if result.accepted:
        print(f"accepted ({len(proof.lines)} lines)")
        return EXIT_OK
    print(f"rejected at line {result.line}: {result.reason} ({result.detail})")
    return EXIT_REJECTED


def build_arg_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="plogic",
        description="propositional logic: tables, relations, rewrites, proofs",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine output")
        p.add_argument(
            "--unicode", action="store_true", help="render with unicode glyphs"
        )

    p = sub.add_parser("parse", help="validate a formula and echo canonical form")
    p.add_argument("formula")
    common(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("table", help="print the truth table")
    p.add_argument("formula")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="classify tautology/contradiction/contingent")
    p.add_argument("formula")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("relate", help="test the parallel and perpendicular relations")
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.set_defaults(func=cmd_relate)

    p = sub.add_parser("transform", help="apply a rewriting rule")
    p.add_argument(
        "rule", choices=["upsilon", "upsilon-inv", "psi", "psi-inv", "desugar"]
    )
    p.add_argument("formula")
    p.add_argument("--trace", "-t", help="trace file (written by upsilon, read by upsilon-inv)")
    common(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("prove", help="generate a checkable proof of a tautology")
    p.add_argument("formula", nargs="?")
    p.add_argument("--out", "-o", help="write the proof here instead of stdout")
    p.add_argument("--dir", "-d", help="output directory for --main-results")
    p.add_argument(
        "--main-results",
        action="store_true",
        help="emit proofs of the four regrouping biconditionals",
    )
    common(p)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("verify", help="check a proof file")
    p.add_argument("proof_file")
    p.set_defaults(func=cmd_verify)

    return top


def main(argv: list[str] | None = None) -> int:
    top = build_arg_parser()
    args = top.parse_args(argv)
    if args.command == "transform" and args.rule == "upsilon-inv" and not args.trace:
        top.error("upsilon-inv requires --trace")
    if args.command == "prove" and not args.main_results and not args.formula:
        top.error("prove needs a formula or --main-results")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _SEMANTIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (OSError, json.JSONDecodeError, LogicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
