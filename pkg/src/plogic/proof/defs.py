"""Definitional equations of the calculus.

Negation and disjunction are the primitive connectives; everything else
is an abbreviation, rewritten one step at a time by DEF proof lines:

    a imp b   =  !a or b
    a and b   =  !(!a or !b)
    a iff b   =  (a imp b) and (b imp a)
    a nor b   =  !(a or b)
    a nand b  =  !(a and b)
    a nimp b  =  !(a imp b)
    a xor b   =  !(a iff b)
    a xiff b  =  a iff b
"""

from __future__ import annotations

from ..formula import Bin, Formula, Not, Operator

DEFINED_OPS = (
    Operator.IMP,
    Operator.AND,
    Operator.IFF,
    Operator.NOR,
    Operator.NAND,
    Operator.NIMP,
    Operator.XOR,
    Operator.UPDOWN,
)


def definiens(op: Operator, a: Formula, b: Formula) -> Formula:
    """Right-hand side of the definition of ``op`` applied to (a, b)."""
    if op is Operator.IMP:
        return Bin(Operator.OR, Not(a), b)
    if op is Operator.AND:
        return Not(Bin(Operator.OR, Not(a), Not(b)))
    if op is Operator.IFF:
        return Bin(Operator.AND, Bin(Operator.IMP, a, b), Bin(Operator.IMP, b, a))
    if op is Operator.NOR:
        return Not(Bin(Operator.OR, a, b))
    if op is Operator.NAND:
        return Not(Bin(Operator.AND, a, b))
    if op is Operator.NIMP:
        return Not(Bin(Operator.IMP, a, b))
    if op is Operator.XOR:
        return Not(Bin(Operator.IFF, a, b))
    if op is Operator.UPDOWN:
        return Bin(Operator.IFF, a, b)
    raise ValueError(f"{op} is primitive, not defined")


def match_definiens(op: Operator, f: Formula) -> tuple[Formula, Formula] | None:
    """Recover (a, b) such that ``definiens(op, a, b) == f``, if possible."""
    if op is Operator.IMP:
        if isinstance(f, Bin) and f.op is Operator.OR and isinstance(f.left, Not):
            return f.left.child, f.right
        return None
    if op is Operator.AND:
        if (
            isinstance(f, Not)
            and isinstance(f.child, Bin)
            and f.child.op is Operator.OR
            and isinstance(f.child.left, Not)
            and isinstance(f.child.right, Not)
        ):
            return f.child.left.child, f.child.right.child
        return None
    if op is Operator.IFF:
        if (
            isinstance(f, Bin)
            and f.op is Operator.AND
            and isinstance(f.left, Bin)
            and f.left.op is Operator.IMP
            and isinstance(f.right, Bin)
            and f.right.op is Operator.IMP
            and f.left.left == f.right.right
            and f.left.right == f.right.left
        ):
            return f.left.left, f.left.right
        return None
    if op is Operator.UPDOWN:
        if isinstance(f, Bin) and f.op is Operator.IFF:
            return f.left, f.right
        return None
    inner = {
        Operator.NOR: Operator.OR,
        Operator.NAND: Operator.AND,
        Operator.NIMP: Operator.IMP,
        Operator.XOR: Operator.IFF,
    }.get(op)
    if inner is None:
        raise ValueError(f"{op} is primitive, not defined")
    if isinstance(f, Not) and isinstance(f.child, Bin) and f.child.op is inner:
        return f.child.left, f.child.right
    return None
