"""Concrete syntax: parsing and rendering of formulas.

Two dialects share one grammar.  The unicode dialect uses the glyphs
``¬ ∨ ∧ → ↔ ↓ ↑ ← ⊕ ↕``; the ascii dialect uses ``!``/``not``, ``or``,
``and``, ``->``/``imp``, ``<->``/``iff``, ``nor``, ``nand``, ``nimp``,
``xor`` and ``xiff``.  Binary connectives have no precedence and no
associativity: an unparenthesized ``a op b op c`` is rejected rather than
grouped.  A single outermost pair of parentheses may be omitted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    AmbiguousChain,
    EmptyInput,
    UnbalancedParens,
    UnexpectedToken,
    UnknownToken,
)
from .formula import Atom, Bin, Formula, Not, Operator


class Dialect(enum.Enum):
    UNICODE = "unicode"
    ASCII = "ascii"


_UNICODE_OPS = {
    Operator.OR: "∨",
    Operator.AND: "∧",
    Operator.IMP: "→",
    Operator.IFF: "↔",
    Operator.NOR: "↓",
    Operator.NAND: "↑",
    Operator.NIMP: "←",
    Operator.XOR: "⊕",
    Operator.UPDOWN: "↕",
}

_ASCII_OPS = {op: op.value for op in Operator}

_NEG = {Dialect.UNICODE: "¬", Dialect.ASCII: "!"}


def operator_symbol(op: Operator, dialect: Dialect) -> str:
    if dialect is Dialect.UNICODE:
        return _UNICODE_OPS[op]
    return _ASCII_OPS[op]


def negation_symbol(dialect: Dialect) -> str:
    return _NEG[dialect]

# Token kinds
_LPAREN = "("
_RPAREN = ")"
_NOT = "not"
_BINOP = "binop"
_ATOM = "atom"
_EOF = "eof"

_SYMBOL_TOKENS = {
    "¬": (_NOT, None),
    "!": (_NOT, None),
    "(": (_LPAREN, None),
    ")": (_RPAREN, None),
    "∨": (_BINOP, Operator.OR),
    "∧": (_BINOP, Operator.AND),
    "→": (_BINOP, Operator.IMP),
    "↔": (_BINOP, Operator.IFF),
    "↓": (_BINOP, Operator.NOR),
    "↑": (_BINOP, Operator.NAND),
    "←": (_BINOP, Operator.NIMP),
    "⊕": (_BINOP, Operator.XOR),
    "↕": (_BINOP, Operator.UPDOWN),
}

_KEYWORD_TOKENS = {
    "not": (_NOT, None),
    "or": (_BINOP, Operator.OR),
    "and": (_BINOP, Operator.AND),
    "imp": (_BINOP, Operator.IMP),
    "iff": (_BINOP, Operator.IFF),
    "nor": (_BINOP, Operator.NOR),
    "nand": (_BINOP, Operator.NAND),
    "nimp": (_BINOP, Operator.NIMP),
    "xor": (_BINOP, Operator.XOR),
    "xiff": (_BINOP, Operator.UPDOWN),
}


@dataclass
class _Token:
    kind: str
    op: Operator | None
    text: str
    pos: int


def _lex(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        # multi-character ascii arrows before anything that could prefix them
        if text.startswith("<->", i):
            tokens.append(_Token(_BINOP, Operator.IFF, "<->", i))
            i += 3
            continue
        if text.startswith("->", i):
            tokens.append(_Token(_BINOP, Operator.IMP, "->", i))
            i += 2
            continue
        if ch in _SYMBOL_TOKENS:
            kind, op = _SYMBOL_TOKENS[ch]
            tokens.append(_Token(kind, op, ch, i))
            i += 1
            continue
        if ch.isalpha() and ch.isascii():
            j = i + 1
            while j < n and text[j].isascii() and (text[j].isalnum()):
                j += 1
            word = text[i:j]
            if word in _KEYWORD_TOKENS:
                kind, op = _KEYWORD_TOKENS[word]
                tokens.append(_Token(kind, op, word, i))
            else:
                tokens.append(_Token(_ATOM, None, word, i))
            i = j
            continue
        raise UnknownToken(f"unknown token {ch!r} at position {i}", i)
    tokens.append(_Token(_EOF, None, "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expression(self) -> Formula:
        """One operand, optionally followed by exactly one binary connective."""
        left = self.unit()
        tok = self.peek()
        if tok.kind != _BINOP:
            return left
        op = self.advance().op
        right = self.unit()
        after = self.peek()
        if after.kind == _BINOP:
            raise AmbiguousChain(
                f"operator chain is ambiguous at position {after.pos}; "
                "parenthesize one side",
                after.pos,
            )
        assert op is not None
        return Bin(op, left, right)

    def unit(self) -> Formula:
        tok = self.advance()
        if tok.kind == _ATOM:
            return Atom(tok.text)
        if tok.kind == _NOT:
            return Not(self.unit())
        if tok.kind == _LPAREN:
            inner = self.expression()
            closing = self.advance()
            if closing.kind == _RPAREN:
                return inner
            if closing.kind == _EOF:
                raise UnbalancedParens(
                    f"missing ')' at position {closing.pos}", closing.pos
                )
            raise UnexpectedToken(
                f"expected ')' at position {closing.pos}, found {closing.text!r}",
                closing.pos,
            )
        if tok.kind == _RPAREN:
            raise UnbalancedParens(f"unmatched ')' at position {tok.pos}", tok.pos)
        raise UnexpectedToken(
            f"expected a formula at position {tok.pos}", tok.pos
        )


def parse(text: str) -> Formula:
    """Parse a formula in either dialect; whitespace is insignificant."""
    tokens = _lex(text)
    if tokens[0].kind == _EOF:
        raise EmptyInput("empty input")
    p = _Parser(tokens)
    f = p.expression()
    trailing = p.peek()
    if trailing.kind == _EOF:
        return f
    if trailing.kind == _BINOP:
        raise AmbiguousChain(
            f"operator chain is ambiguous at position {trailing.pos}; "
            "parenthesize one side",
            trailing.pos,
        )
    if trailing.kind == _RPAREN:
        raise UnbalancedParens(
            f"unmatched ')' at position {trailing.pos}", trailing.pos
        )
    raise UnexpectedToken(
        f"unexpected {trailing.text!r} at position {trailing.pos}", trailing.pos
    )


def render(f: Formula, dialect: Dialect = Dialect.ASCII) -> str:
    """Fully parenthesized canonical text; `parse(render(f, d)) == f`."""
    ops = _UNICODE_OPS if dialect is Dialect.UNICODE else _ASCII_OPS
    neg = _NEG[dialect]

    def go(node: Formula) -> str:
        if isinstance(node, Atom):
            return node.name
        if isinstance(node, Not):
            return neg + go(node.child)
        return f"({go(node.left)} {ops[node.op]} {go(node.right)})"

    return go(f)
