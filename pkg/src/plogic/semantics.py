"""Truth-table semantics: evaluation, tables, and the two semantic relations.

Tables follow the classic printed layout: rows run from the all-ones
assignment down to all-zeros, and there is one column per atom occurrence
and per binary-connective occurrence, read left to right.  A negation
(or a chain of negations) sitting directly on an atom or on a
parenthesized binary formula does not get a column of its own; its value
is shown in the column of the symbol it guards.  The root column is the
final analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import MissingAtom, TooManyAtoms
from .formula import (
    Atom,
    Formula,
    Not,
    Operator,
    Path,
    Step,
    atoms_of,
    subformula_at,
)
from .parser import Dialect, negation_symbol, operator_symbol

Assignment = dict[str, int]

ATOM_LIMIT = 24

# Operator values over inputs (1,1), (1,0), (0,1), (0,0).
TRUTH: dict[Operator, tuple[int, int, int, int]] = {
    Operator.OR: (1, 1, 1, 0),
    Operator.AND: (1, 0, 0, 0),
    Operator.IMP: (1, 0, 1, 1),
    Operator.IFF: (1, 0, 0, 1),
    Operator.NOR: (0, 0, 0, 1),
    Operator.NAND: (0, 1, 1, 1),
    Operator.NIMP: (0, 1, 0, 0),
    Operator.XOR: (0, 1, 1, 0),
    Operator.UPDOWN: (1, 0, 0, 1),
}


def op_value(op: Operator, x: int, y: int) -> int:
    return TRUTH[op][(1 - x) * 2 + (1 - y)]


def evaluate(f: Formula, a: Assignment) -> int:
    if isinstance(f, Atom):
        try:
            return a[f.name]
        except KeyError:
            raise MissingAtom(f.name) from None
    if isinstance(f, Not):
        return 1 - evaluate(f.child, a)
    return op_value(f.op, evaluate(f.left, a), evaluate(f.right, a))


def _check_atom_limit(atoms: list[str]) -> None:
    if len(atoms) > ATOM_LIMIT:
        raise TooManyAtoms(len(atoms), ATOM_LIMIT)


def assignments(atoms: list[str]) -> Iterator[Assignment]:
    """All assignments in table order: all-ones first, all-zeros last."""
    n = len(atoms)
    for i in range(2**n):
        m = 2**n - 1 - i
        yield {name: (m >> (n - 1 - j)) & 1 for j, name in enumerate(atoms)}


@dataclass
class Column:
    path: Path
    values: list[int]


@dataclass
class TruthTable:
    atom_order: list[str]
    rows: list[Assignment]
    columns: list[Column]
    final_index: int


def _column_paths(f: Formula) -> list[Path]:
    """Column positions in reading order.

    Emits one entry per atom and per binary connective; a run of
    negations directly above a node is folded into that node's column,
    so the recorded path points at the outermost negation of the run.
    """
    out: list[Path] = []

    def walk(node: Formula, path: Path, group_top: Path | None) -> None:
        if isinstance(node, Not):
            top = path if group_top is None else group_top
            walk(node.child, path + (Step.CHILD,), top)
            return
        own = path if group_top is None else group_top
        if isinstance(node, Atom):
            out.append(own)
            return
        walk(node.left, path + (Step.LEFT,), None)
        out.append(own)
        walk(node.right, path + (Step.RIGHT,), None)

    walk(f, (), None)
    return out


def table_labels(f: Formula, dialect: Dialect = Dialect.UNICODE) -> list[str]:
    """Header cells aligned with the table columns.

    Cells carry the symbol of their column; negations and opening
    parentheses attach to the cell that follows them, closing
    parentheses to the cell before.
    """
    neg = negation_symbol(dialect)
    labels: list[str] = []
    pending = ""

    def emit(core: str) -> None:
        nonlocal pending
        labels.append(pending + core)
        pending = ""

    def close() -> None:
        labels[-1] = labels[-1] + ")"

    def walk(node: Formula, at_root: bool = False) -> None:
        nonlocal pending
        if isinstance(node, Not):
            pending += neg
            walk(node.child)
            return
        if isinstance(node, Atom):
            emit(node.name)
            return
        # the outermost parenthesis pair is left off, as in print
        if not at_root:
            pending += "("
        walk(node.left)
        emit(operator_symbol(node.op, dialect))
        walk(node.right)
        if not at_root:
            close()

    walk(f, at_root=True)
    return labels


def truth_table(f: Formula) -> TruthTable:
    atoms = atoms_of(f)
    _check_atom_limit(atoms)
    rows = list(assignments(atoms))
    paths = _column_paths(f)
    columns = [Column(path, []) for path in paths]
    subs = [subformula_at(f, path) for path in paths]
    for row in rows:
        for col, sub in zip(columns, subs):
            col.values.append(evaluate(sub, row))
    final_index = next(i for i, c in enumerate(columns) if c.path == ())
    return TruthTable(atoms, rows, columns, final_index)


def is_tautology(f: Formula) -> bool:
    atoms = atoms_of(f)
    _check_atom_limit(atoms)
    return all(evaluate(f, row) == 1 for row in assignments(atoms))


def is_contradiction(f: Formula) -> bool:
    atoms = atoms_of(f)
    _check_atom_limit(atoms)
    return all(evaluate(f, row) == 0 for row in assignments(atoms))


@dataclass
class RelationVerdict:
    holds: bool
    witness: Optional[Assignment] = None


def _combined_atoms(a: Formula, b: Formula) -> list[str]:
    atoms = atoms_of(a)
    seen = set(atoms)
    for name in atoms_of(b):
        if name not in seen:
            seen.add(name)
            atoms.append(name)
    _check_atom_limit(atoms)
    return atoms


def is_parallel(a: Formula, b: Formula) -> RelationVerdict:
    """Do the final analyses of ``a`` and ``b`` agree on every row?

    Evaluated over the union of both atom sets; the witness is the first
    disagreeing row in table order.
    """
    for row in assignments(_combined_atoms(a, b)):
        if evaluate(a, row) != evaluate(b, row):
            return RelationVerdict(False, row)
    return RelationVerdict(True)


def is_perpendicular(a: Formula, b: Formula) -> RelationVerdict:
    """Is the final analysis of ``b`` the bitwise complement of ``a``'s?"""
    for row in assignments(_combined_atoms(a, b)):
        if evaluate(b, row) != 1 - evaluate(a, row):
            return RelationVerdict(False, row)
    return RelationVerdict(True)
