"""Proof serialization.

Text format, one line per proof step (`.` is the empty path):

    1. (p or (p or p)) ; AX2 [A:=p, B:=p]
    2. (!p or (p or p)) ; DEF IMP UNFOLD @ .
    3. q ; MP 5,2

The JSON mirror carries the same fields plus the goal.  Both formats
round-trip exactly through the formula parser.
"""

from __future__ import annotations

import json
import re

from ..errors import ParseError
from ..formula import Operator, path_from_str, path_to_str
from ..parser import parse, render
from .objects import (
    AxiomJust,
    DefJust,
    Direction,
    Justification,
    MPJust,
    Proof,
    ProofLine,
    axiom_just,
)

_LINE_RE = re.compile(r"(\d+)\.\s*(.*?)\s*;\s*(.*?)\s*$")
_AXIOM_RE = re.compile(r"AX(\d+)\s*\[(.*)\]\s*$")
_MP_RE = re.compile(r"MP\s+(\d+)\s*,\s*(\d+)\s*$")
_DEF_RE = re.compile(r"DEF\s+(\w+)\s+(UNFOLD|FOLD)\s+@\s+(\S+)\s*$")


def _just_to_text(just: Justification) -> str:
    if isinstance(just, AxiomJust):
        bindings = ", ".join(f"{v}:={render(f)}" for v, f in just.subst)
        return f"AX{just.schema} [{bindings}]"
    if isinstance(just, MPJust):
        return f"MP {just.major},{just.minor}"
    if isinstance(just, DefJust):
        path = path_to_str(just.path) or "."
        return f"DEF {just.name.name} {just.direction.value} @ {path}"
    raise ValueError("premise lines cannot be serialized")


def _just_from_text(text: str) -> Justification:
    m = _AXIOM_RE.match(text)
    if m:
        subst = {}
        body = m.group(2).strip()
        if body:
            for part in body.split(","):
                var, _, formula_text = part.partition(":=")
                subst[var.strip()] = parse(formula_text)
        return axiom_just(int(m.group(1)), subst)
    m = _MP_RE.match(text)
    if m:
        return MPJust(int(m.group(1)), int(m.group(2)))
    m = _DEF_RE.match(text)
    if m:
        try:
            name = Operator[m.group(1)]
        except KeyError:
            raise ParseError(f"unknown definition name {m.group(1)!r}") from None
        path_text = m.group(3)
        path = path_from_str("" if path_text == "." else path_text)
        return DefJust(name, path, Direction(m.group(2)))
    raise ParseError(f"unrecognized justification {text!r}")


def proof_to_text(proof: Proof) -> str:
    out = [
        f"{line.index}. {render(line.formula)} ; {_just_to_text(line.just)}"
        for line in proof.lines
    ]
    return "\n".join(out) + "\n"


def proof_from_text(text: str) -> Proof:
    lines: list[ProofLine] = []
    for raw in text.splitlines():
        raw = raw.strip()
        if not raw or raw.startswith("#"):
            continue
        m = _LINE_RE.match(raw)
        if m is None:
            raise ParseError(f"unparseable proof line {raw!r}")
        lines.append(
            ProofLine(int(m.group(1)), parse(m.group(2)), _just_from_text(m.group(3)))
        )
    if not lines:
        raise ParseError("proof file has no lines")
    return Proof(goal=lines[-1].formula, lines=lines)


def _just_to_dict(just: Justification) -> dict:
    if isinstance(just, AxiomJust):
        return {
            "kind": "axiom",
            "schema": just.schema,
            "subst": {v: render(f) for v, f in just.subst},
        }
    if isinstance(just, MPJust):
        return {"kind": "mp", "major": just.major, "minor": just.minor}
    if isinstance(just, DefJust):
        return {
            "kind": "def",
            "name": just.name.name,
            "direction": just.direction.value,
            "path": path_to_str(just.path),
        }
    raise ValueError("premise lines cannot be serialized")


def _just_from_dict(data: dict) -> Justification:
    kind = data["kind"]
    if kind == "axiom":
        return axiom_just(
            data["schema"], {v: parse(f) for v, f in data["subst"].items()}
        )
    if kind == "mp":
        return MPJust(data["major"], data["minor"])
    if kind == "def":
        return DefJust(
            Operator[data["name"]],
            path_from_str(data["path"]),
            Direction(data["direction"]),
        )
    raise ParseError(f"unknown justification kind {kind!r}")


def proof_to_dict(proof: Proof) -> dict:
    return {
        "goal": render(proof.goal),
        "lines": [
            {
                "index": line.index,
                "formula": render(line.formula),
                "just": _just_to_dict(line.just),
            }
            for line in proof.lines
        ],
    }


def proof_from_dict(data: dict) -> Proof:
    lines = [
        ProofLine(
            entry["index"], parse(entry["formula"]), _just_from_dict(entry["just"])
        )
        for entry in data["lines"]
    ]
    return Proof(goal=parse(data["goal"]), lines=lines)


def proof_to_json(proof: Proof) -> str:
    return json.dumps(proof_to_dict(proof), indent=2) + "\n"


def proof_from_json(text: str) -> Proof:
    return proof_from_dict(json.loads(text))


def load_proof(text: str) -> Proof:
    """Read a proof in either format; JSON files start with a brace."""
    if text.lstrip().startswith("{"):
        return proof_from_json(text)
    return proof_from_text(text)
