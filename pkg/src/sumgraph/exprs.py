"""Group expressions: a tiny grammar for naming groups on the command line.

    expr := atom { "x" atom }
    atom := "Z" n | "D" n | "Dic" n | "Q8" | "E2^" n | "(" expr ")"

Keywords are case-insensitive and whitespace between tokens is ignored.
``D`` takes the *order* of the dihedral group (even, at least 6), so D12 is
the symmetry group of the hexagon; ``Dic`` takes the index n of Dic_n
(order 4n); ``E2^t`` is the product of t copies of Z2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .groups import (
    Group,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian_2,
    quaternion,
)

__all__ = [
    "GroupExpr",
    "CyclicExpr",
    "DihedralExpr",
    "DicyclicExpr",
    "QuaternionExpr",
    "ElementaryAbelianExpr",
    "ProductExpr",
    "parse_group_expr",
    "format_group_expr",
    "build_group",
]


@dataclass(frozen=True)
class CyclicExpr:
    n: int


@dataclass(frozen=True)
class DihedralExpr:
    order: int  # group order 2n, even and >= 6


@dataclass(frozen=True)
class DicyclicExpr:
    n: int  # group order is 4n


@dataclass(frozen=True)
class QuaternionExpr:
    pass


@dataclass(frozen=True)
class ElementaryAbelianExpr:
    t: int


@dataclass(frozen=True)
class ProductExpr:
    parts: tuple["GroupExpr", ...]


GroupExpr = (
    CyclicExpr | DihedralExpr | DicyclicExpr | QuaternionExpr | ElementaryAbelianExpr | ProductExpr
)


_TOKEN_RE = re.compile(
    r"""\s*(?:
      (?P<dic>dic)
    | (?P<e2>e2\^)
    | (?P<q8>q8)
    | (?P<z>z)
    | (?P<d>d)
    | (?P<x>x)
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<int>\d+)
    )""",
    re.IGNORECASE | re.VERBOSE,
)

_ATOM_TOKENS = ("Z", "D", "Dic", "Q8", "E2^", "(")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].lstrip()
            if not rest:
                break
            at = len(text) - len(rest)
            raise ParseError(f"unrecognized input {rest[:8]!r}", at, _ATOM_TOKENS)
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str, int] | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    @property
    def offset(self) -> int:
        tok = self.peek()
        return tok[2] if tok is not None else len(self.text)

    def integer(self, what: str) -> tuple[int, int]:
        tok = self.peek()
        if tok is None or tok[0] != "int":
            raise ParseError(f"expected {what}", self.offset, ("integer",))
        self.take()
        return int(tok[1]), tok[2]

    def atom(self) -> GroupExpr:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected a group atom", self.offset, _ATOM_TOKENS)
        kind, _, at = tok
        if kind == "z":
            self.take()
            n, n_at = self.integer("cyclic group order")
            if n < 1:
                raise ParseError("cyclic order must be at least 1", n_at, ("integer >= 1",))
            return CyclicExpr(n)
        if kind == "d":
            self.take()
            order, n_at = self.integer("dihedral group order")
            if order < 6 or order % 2:
                raise ParseError(
                    "dihedral order must be even and at least 6", n_at, ("even integer >= 6",)
                )
            return DihedralExpr(order)
        if kind == "dic":
            self.take()
            n, n_at = self.integer("dicyclic index")
            if n < 2:
                raise ParseError("dicyclic index must be at least 2", n_at, ("integer >= 2",))
            return DicyclicExpr(n)
        if kind == "q8":
            self.take()
            return QuaternionExpr()
        if kind == "e2":
            self.take()
            t, t_at = self.integer("exponent")
            if t < 0:
                raise ParseError("exponent must be non-negative", t_at, ("integer >= 0",))
            return ElementaryAbelianExpr(t)
        if kind == "lparen":
            self.take()
            inner = self.expr()
            tok = self.peek()
            if tok is None or tok[0] != "rparen":
                raise ParseError("unclosed parenthesis", self.offset, (")",))
            self.take()
            return inner
        raise ParseError(f"expected a group atom, found {tok[1]!r}", at, _ATOM_TOKENS)

    def expr(self) -> GroupExpr:
        parts = [self.atom()]
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "x":
                break
            self.take()
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else ProductExpr(tuple(parts))


def parse_group_expr(text: str) -> GroupExpr:
    """Parse an expression like ``"Z4 x Z3"`` or ``"D12"``; see module docs."""
    parser = _Parser(text)
    expr = parser.expr()
    tok = parser.peek()
    if tok is not None:
        raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2], ("x", "end of input"))
    return expr


def format_group_expr(expr: GroupExpr) -> str:
    """Canonical text for an expression; round-trips through the parser."""
    if isinstance(expr, CyclicExpr):
        return f"Z{expr.n}"
    if isinstance(expr, DihedralExpr):
        return f"D{expr.order}"
    if isinstance(expr, DicyclicExpr):
        return f"Dic{expr.n}"
    if isinstance(expr, QuaternionExpr):
        return "Q8"
    if isinstance(expr, ElementaryAbelianExpr):
        return f"E2^{expr.t}"
    bits = []
    for p in expr.parts:
        text = format_group_expr(p)
        bits.append(f"({text})" if isinstance(p, ProductExpr) else text)
    return " x ".join(bits)


def build_group(expr: GroupExpr) -> Group:
    """Evaluate an expression to a concrete group."""
    if isinstance(expr, CyclicExpr):
        return cyclic(expr.n)
    if isinstance(expr, DihedralExpr):
        return dihedral(expr.order // 2)
    if isinstance(expr, DicyclicExpr):
        return dicyclic(expr.n)
    if isinstance(expr, QuaternionExpr):
        return quaternion()
    if isinstance(expr, ElementaryAbelianExpr):
        return elementary_abelian_2(expr.t)
    return direct_product(*(build_group(p) for p in expr.parts))
