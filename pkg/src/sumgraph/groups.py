"""Finite groups as validated Cayley tables.

Elements are dense indices ``0..n-1`` into an ``n x n`` multiplication
table.  The family constructors (cyclic, dihedral, dicyclic, abelian
products, the quaternion group) fix canonical element orders and labels so
that subgroups can be named stably in tests and on the command line:

* ``cyclic(n)``      -- elements ``0..n-1``, labels ``"0".."n-1"``.
* ``dihedral(n)``    -- ``a^0..a^{n-1}`` then ``a^0 b..a^{n-1} b``; labels
  ``e, a, a^2, ..., b, ab, a^2b, ...``.
* ``dicyclic(n)``    -- ``a^0..a^{2n-1}`` then ``a^1 b..a^{2n} b`` (so the
  final index carries ``b`` itself); same label style.
* ``direct_product`` -- tuples in lexicographic order, labels ``"(x,y)"``.

Groups and subgroups are immutable once constructed, so they may be shared
freely between threads.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadParameterError,
    NoIdentityError,
    NoInverseError,
    NotAbelianError,
    NotASubgroupError,
    NotAssociativeError,
    NotLatinSquareError,
)

__all__ = [
    "DEFAULT_MAX_ORDER",
    "MAX_ORDER_ENV",
    "max_supported_order",
    "Tag",
    "Group",
    "Subgroup",
    "Coset",
    "AbelianType",
    "group_from_cayley_table",
    "group_from_json",
    "cyclic",
    "dihedral",
    "dicyclic",
    "quaternion",
    "abelian",
    "elementary_abelian_2",
    "direct_product",
    "element_order",
    "involutions",
    "squares",
    "is_abelian",
    "conjugacy_classes",
    "subgroup",
    "subgroup_generated",
    "trivial_subgroup",
    "whole_group",
    "normal_subgroups",
    "all_subgroups",
    "right_cosets",
    "right_transversal",
    "coset_square_membership",
    "coset_has_involution",
    "abelian_type",
    "is_dedekind",
    "subgroup_as_group",
    "abelian_isomorphism_types",
]

DEFAULT_MAX_ORDER = 512
MAX_ORDER_ENV = "SUMGRAPH_MAX_ORDER"


def max_supported_order() -> int:
    """Soft cap on group order; override with the SUMGRAPH_MAX_ORDER variable."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise BadParameterError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise BadParameterError(f"{MAX_ORDER_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Tag:
    """Structural descriptor attached by the family constructors."""

    kind: str  # "cyclic" | "dihedral" | "dicyclic" | "product" | "generic"
    param: int | None = None
    parts: tuple["Tag", ...] = ()

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"Z{self.param}"
        if self.kind == "dihedral":
            return f"D{2 * self.param}"
        if self.kind == "dicyclic":
            return f"Dic{self.param}"
        if self.kind == "product":
            bits = []
            for p in self.parts:
                text = str(p)
                bits.append(f"({text})" if p.kind == "product" else text)
            return " x ".join(bits)
        return "generic"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.param is not None:
            out["param"] = self.param
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out

    @staticmethod
    def from_json(data: dict | None) -> "Tag | None":
        if data is None:
            return None
        return Tag(
            kind=data["kind"],
            param=data.get("param"),
            parts=tuple(Tag.from_json(p) for p in data.get("parts", ())),
        )


GENERIC = Tag("generic")


class Group:
    """A finite group on elements ``0..order-1`` with a validated table.

    Do not call directly; use :func:`group_from_cayley_table` or one of the
    family constructors, which perform the full validation.
    """

    def __init__(
        self,
        table: np.ndarray,
        labels: tuple[str, ...],
        tag: Tag,
        identity: int,
        inverses: tuple[int, ...],
    ):
        self.order = int(table.shape[0])
        table = table.astype(np.int32, copy=True)
        table.flags.writeable = False
        self.table = table
        self.labels = labels
        self.tag = tag
        self.identity = identity
        self.inverses = inverses

    # -- scalar access helpers -------------------------------------------

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as plain Python lists, for fast scalar lookups."""
        return self.table.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        result, base = self.identity, g
        while k:
            if k & 1:
                result = self.rows[result][base]
            base = self.rows[base][base]
            k >>= 1
        return result

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def label_index(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for i, lbl in enumerate(self.labels):
            out.setdefault(lbl, i)
        return out

    # -- cached whole-group statistics -----------------------------------

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for g in range(self.order):
            k, x = 1, g
            while x != self.identity:
                x = self.rows[x][g]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def involution_set(self) -> frozenset[int]:
        return frozenset(g for g, o in enumerate(self.element_orders) if o == 2)

    @cached_property
    def square_set(self) -> frozenset[int]:
        return frozenset(int(v) for v in np.diagonal(self.table))

    @cached_property
    def abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "table": self.table.tolist(),
            "tag": self.tag.to_json() if self.tag is not None else None,
        }

    def __repr__(self) -> str:
        return f"<Group order={self.order} tag={self.tag}>"


class Subgroup:
    """A validated subgroup of a :class:`Group`, stored as sorted indices."""

    def __init__(self, parent: Group, members: Iterable[int]):
        ms = sorted({int(m) for m in members})
        if not ms:
            raise NotASubgroupError("a subgroup cannot be empty")
        if ms[0] < 0 or ms[-1] >= parent.order:
            raise NotASubgroupError(f"member out of range 0..{parent.order - 1}: {ms}")
        member_set = frozenset(ms)
        if parent.identity not in member_set:
            raise NotASubgroupError("member set does not contain the identity")
        idx = np.fromiter(ms, dtype=np.int64)
        products = parent.table[np.ix_(idx, idx)]
        mask = np.zeros(parent.order, dtype=bool)
        mask[idx] = True
        if not mask[products].all():
            bad = np.argwhere(~mask[products])[0]
            a, b = ms[int(bad[0])], ms[int(bad[1])]
            raise NotASubgroupError(
                f"not closed under products: {a} * {b} = {parent.mul(a, b)} is outside"
            )
        for m in ms:
            if parent.inv(m) not in member_set:
                raise NotASubgroupError(f"not closed under inverses: inv({m}) is outside")
        self.parent = parent
        self.members = tuple(ms)
        self.member_set = member_set

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def is_normal(self) -> bool:
        G = self.parent
        idx = np.fromiter(self.members, dtype=np.int64)
        inv_col = np.fromiter(G.inverses, dtype=np.int64)
        left = G.table[np.ix_(inv_col, idx)]  # left[g, h] = inv(g) * h
        conj = G.table[left, np.arange(G.order)[:, None]]  # inv(g) * h * g
        mask = np.zeros(G.order, dtype=bool)
        mask[idx] = True
        return bool(mask[conj].all())

    def __contains__(self, g: int) -> bool:
        return g in self.member_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent!r}>"


@dataclass(frozen=True)
class Coset:
    """A right coset ``H x``; the representative is its minimal member."""

    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class AbelianType:
    """Invariant factors and primary decomposition of an abelian group."""

    invariant_factors: tuple[int, ...]
    primary: tuple[tuple[int, tuple[int, ...]], ...]  # (prime, ascending exponents)
    sylow_two: Subgroup
    odd_part: Subgroup

    def exponents_at(self, p: int) -> tuple[int, ...]:
        for q, exps in self.primary:
            if q == p:
                return exps
        return ()


# ---------------------------------------------------------------------------
# Table validation
# ---------------------------------------------------------------------------


def _check_associative(table: np.ndarray) -> None:
    """Full O(n^3) scan, chunked to bound memory at a few million cells."""
    n = table.shape[0]
    chunk = max(1, (1 << 22) // max(1, n * n))
    for start in range(0, n, chunk):
        block = table[start : start + chunk]
        lhs = table[block, :]  # lhs[i,j,k] = (x_i x_j) x_k
        rhs = block[:, table]  # rhs[i,j,k] = x_i (x_j x_k)
        if not np.array_equal(lhs, rhs):
            i, j, k = (int(v) for v in np.argwhere(lhs != rhs)[0])
            raise NotAssociativeError(
                f"associativity fails at ({start + i}, {j}, {k}): "
                f"({start + i}*{j})*{k} != {start + i}*({j}*{k})"
            )


def group_from_cayley_table(
    table: Sequence[Sequence[int]] | np.ndarray,
    labels: Sequence[str] | None = None,
    tag: Tag | None = None,
) -> Group:
    """Validate a multiplication table and wrap it in a :class:`Group`.

    Checks, in order: shape and entry range, the Latin-square property,
    a two-sided identity, two-sided inverses, and associativity (full
    triple scan, vectorised).  Each failure names the offending indices.
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise BadParameterError(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise BadParameterError("a group has at least one element")
    cap = max_supported_order()
    if n > cap:
        raise BadParameterError(f"order {n} exceeds the supported cap {cap}")
    if arr.min() < 0 or arr.max() >= n:
        raise BadParameterError(f"table entries must lie in 0..{n - 1}")

    expect = np.arange(n)
    row_ok = (np.sort(arr, axis=1) == expect).all(axis=1)
    if not row_ok.all():
        raise NotLatinSquareError(f"row {int(np.argmin(row_ok))} is not a permutation")
    col_ok = (np.sort(arr, axis=0) == expect[:, None]).all(axis=0)
    if not col_ok.all():
        raise NotLatinSquareError(f"column {int(np.argmin(col_ok))} is not a permutation")

    idents = np.nonzero((arr == expect).all(axis=1) & (arr == expect[:, None]).all(axis=0))[0]
    if len(idents) == 0:
        raise NoIdentityError("no two-sided identity element")
    e = int(idents[0])

    inv = np.argmax(arr == e, axis=1)
    if not (arr[inv, expect] == e).all():
        g = int(np.argmin(arr[inv, expect] == e))
        raise NoInverseError(f"element {g} has no two-sided inverse")

    _check_associative(arr)

    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise BadParameterError(f"expected {n} labels, got {len(labels)}")
    return Group(arr, labels, tag if tag is not None else GENERIC, e, tuple(int(v) for v in inv))


def group_from_json(data: dict) -> Group:
    """Inverse of :meth:`Group.to_json_dict`."""
    return group_from_cayley_table(
        data["table"], data.get("labels"), Tag.from_json(data.get("tag"))
    )


# ---------------------------------------------------------------------------
# Family constructors
# ---------------------------------------------------------------------------


def cyclic(n: int) -> Group:
    """The cyclic group Z_n on ``0..n-1`` under addition mod n."""
    if n < 1:
        raise BadParameterError(f"cyclic order must be >= 1, got {n}")
    i = np.arange(n)
    table = (i[:, None] + i[None, :]) % n
    return group_from_cayley_table(table, tag=Tag("cyclic", n))


def _power_label(i: int, suffix: str) -> str:
    if i == 0:
        return suffix if suffix else "e"
    head = "a" if i == 1 else f"a^{i}"
    return head + suffix


def dihedral(n: int) -> Group:
    """The dihedral group of order 2n (n >= 3): rotations first, then flips."""
    if n < 3:
        raise BadParameterError(f"dihedral parameter must be >= 3, got {n}")
    size = 2 * n
    table = np.empty((size, size), dtype=np.int64)
    for x in range(size):
        i, xf = x % n, x >= n
        for y in range(size):
            j, yf = y % n, y >= n
            if not xf and not yf:
                table[x, y] = (i + j) % n
            elif not xf and yf:
                table[x, y] = n + (i + j) % n
            elif xf and not yf:
                table[x, y] = n + (i - j) % n
            else:
                table[x, y] = (i - j) % n
    labels = [_power_label(i, "") for i in range(n)] + [_power_label(i, "b") for i in range(n)]
    return group_from_cayley_table(table, labels, Tag("dihedral", n))


def dicyclic(n: int) -> Group:
    """The dicyclic group of order 4n (n >= 2).

    Generators a, b with a of order 2n, b^2 = a^n and b a b^-1 = a^-1.
    Indices ``0..2n-1`` are ``a^i``; index ``2n + i`` is ``a^{i+1} b``.
    """
    if n < 2:
        raise BadParameterError(f"dicyclic parameter must be >= 2, got {n}")
    m = 2 * n
    size = 4 * n

    def b_index(exp: int) -> int:
        return m + (exp - 1) % m

    table = np.empty((size, size), dtype=np.int64)
    for x in range(size):
        xf = x >= m
        i = (x % m + 1) % m if xf else x
        for y in range(size):
            yf = y >= m
            j = (y % m + 1) % m if yf else y
            if not xf and not yf:
                table[x, y] = (i + j) % m
            elif not xf and yf:
                table[x, y] = b_index(i + j)
            elif xf and not yf:
                table[x, y] = b_index(i - j)
            else:
                table[x, y] = (i - j + n) % m
    labels = [_power_label(i, "") for i in range(m)]
    labels += [_power_label((i + 1) % m, "b") for i in range(m)]
    return group_from_cayley_table(table, labels, Tag("dicyclic", n))


_Q8_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
_Q8_UNIT_MUL = {
    ("1", "1"): ("1", 1), ("1", "i"): ("i", 1), ("1", "j"): ("j", 1), ("1", "k"): ("k", 1),
    ("i", "1"): ("i", 1), ("j", "1"): ("j", 1), ("k", "1"): ("k", 1),
    ("i", "i"): ("1", -1), ("j", "j"): ("1", -1), ("k", "k"): ("1", -1),
    ("i", "j"): ("k", 1), ("j", "i"): ("k", -1),
    ("j", "k"): ("i", 1), ("k", "j"): ("i", -1),
    ("k", "i"): ("j", 1), ("i", "k"): ("j", -1),
}


def quaternion() -> Group:
    """The quaternion group {1, -1, i, -i, j, -j, k, -k}."""
    def split(x: int) -> tuple[str, int]:
        return _Q8_LABELS[x & ~1].lstrip("-"), (-1 if x & 1 else 1)

    def join(unit: str, sign: int) -> int:
        base = _Q8_LABELS.index(unit)
        return base + (1 if sign < 0 else 0)

    table = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        ux, sx = split(x)
        for y in range(8):
            uy, sy = split(y)
            uz, s = _Q8_UNIT_MUL[(ux, uy)]
            table[x, y] = join(uz, sx * sy * s)
    return group_from_cayley_table(table, _Q8_LABELS, GENERIC)


def direct_product(*factors: Group) -> Group:
    """Direct product; element tuples ordered lexicographically."""
    if not factors:
        raise BadParameterError("direct_product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    sizes = [g.order for g in factors]
    n = math.prod(sizes)
    cap = max_supported_order()
    if n > cap:
        raise BadParameterError(f"product order {n} exceeds the supported cap {cap}")

    strides = [math.prod(sizes[k + 1 :]) for k in range(len(sizes))]
    table = np.zeros((n, n), dtype=np.int64)
    coords = []
    for g, size, stride in zip(factors, sizes, strides):
        c = (np.arange(n) // stride) % size
        coords.append(c)
        table += g.table.astype(np.int64)[np.ix_(c, c)] * stride
    labels = [
        "(" + ",".join(g.labels[int(c[x])] for g, c in zip(factors, coords)) + ")"
        for x in range(n)
    ]
    tag = Tag("product", parts=tuple(g.tag for g in factors))
    return group_from_cayley_table(table, labels, tag)


def abelian(factor_orders: Sequence[int]) -> Group:
    """Direct product of cyclic groups of the given orders."""
    if any(f < 1 for f in factor_orders):
        raise BadParameterError(f"cyclic factor orders must be >= 1: {factor_orders}")
    if not factor_orders:
        return cyclic(1)
    if len(factor_orders) == 1:
        return cyclic(factor_orders[0])
    return direct_product(*(cyclic(f) for f in factor_orders))


def elementary_abelian_2(t: int) -> Group:
    """The group Z_2^t (the trivial group when t == 0)."""
    if t < 0:
        raise BadParameterError(f"exponent must be >= 0, got {t}")
    return abelian([2] * t)


# ---------------------------------------------------------------------------
# Element and subgroup queries
# ---------------------------------------------------------------------------


def element_order(G: Group, g: int) -> int:
    """The least k >= 1 with g^k = e."""
    if not 0 <= g < G.order:
        raise BadParameterError(f"element {g} out of range 0..{G.order - 1}")
    return G.element_orders[g]


def involutions(G: Group) -> frozenset[int]:
    """All elements of order exactly 2."""
    return G.involution_set


def squares(G: Group) -> frozenset[int]:
    """The set {g*g : g in G} of square elements."""
    return G.square_set


def is_abelian(G: Group) -> bool:
    return G.abelian


def conjugacy_classes(G: Group) -> tuple[tuple[int, ...], ...]:
    """Conjugacy classes, each sorted, ordered by minimal member."""
    if "_classes" not in G.__dict__:
        n = G.order
        inv_col = np.fromiter(G.inverses, dtype=np.int64)
        all_idx = np.arange(n)
        seen = np.zeros(n, dtype=bool)
        classes = []
        for g in range(n):
            if seen[g]:
                continue
            conj = G.table[G.table[inv_col, g], all_idx]  # inv(x) * g * x for all x
            orbit = np.unique(conj)
            seen[orbit] = True
            classes.append(tuple(int(v) for v in orbit))
        G.__dict__["_classes"] = tuple(classes)
    return G.__dict__["_classes"]


def subgroup(G: Group, members: Iterable[int]) -> Subgroup:
    """Validate ``members`` as a subgroup of G."""
    return Subgroup(G, members)


def _closure(table: np.ndarray, seed: Iterable[int]) -> frozenset[int]:
    """Smallest product-closed superset of ``seed`` (a subgroup if e is in it)."""
    idx = np.unique(np.fromiter(seed, dtype=np.int64))
    while True:
        prods = table[np.ix_(idx, idx)].ravel()
        merged = np.union1d(idx, prods)
        if merged.size == idx.size:
            return frozenset(int(v) for v in idx)
        idx = merged


def subgroup_generated(G: Group, generators: Iterable[int]) -> Subgroup:
    """The subgroup generated by the given elements."""
    gens = list(generators)
    for g in gens:
        if not 0 <= g < G.order:
            raise BadParameterError(f"generator {g} out of range 0..{G.order - 1}")
    return Subgroup(G, _closure(G.table, gens + [G.identity]))


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, [G.identity])


def whole_group(G: Group) -> Subgroup:
    return Subgroup(G, range(G.order))


def _mark_normal(sub: Subgroup, flag: bool) -> Subgroup:
    sub.__dict__["is_normal"] = flag
    return sub


def normal_subgroups(G: Group) -> list[Subgroup]:
    """All normal subgroups, sorted by (order, member tuple).

    Works over unions of conjugacy classes: starting from {e}, repeatedly
    extend a known normal subgroup by one whole class and close under
    products.  A product-closed union of classes containing the identity
    is again a normal subgroup, and every normal subgroup arises as such a
    chain, so the fixed point enumerates them all.
    """
    if "_normal_subgroups" not in G.__dict__:
        classes = [np.fromiter(c, dtype=np.int64) for c in conjugacy_classes(G)]
        class_sets = [frozenset(int(v) for v in c) for c in classes]
        seed = frozenset([G.identity])
        found = {seed}
        queue = [seed]
        while queue:
            base = queue.pop()
            for cls in class_sets:
                if cls <= base:
                    continue
                ext = _closure(G.table, base | cls)
                if ext not in found:
                    found.add(ext)
                    queue.append(ext)
        ordered = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
        G.__dict__["_normal_subgroups"] = [_mark_normal(Subgroup(G, s), True) for s in ordered]
    return list(G.__dict__["_normal_subgroups"])


def all_subgroups(G: Group) -> list[Subgroup]:
    """Every subgroup, by closing known subgroups under one extra element."""
    if "_all_subgroups" not in G.__dict__:
        if G.abelian:
            G.__dict__["_all_subgroups"] = normal_subgroups(G)
        else:
            seed = frozenset([G.identity])
            found = {seed}
            queue = [seed]
            while queue:
                base = queue.pop()
                for g in range(G.order):
                    if g in base:
                        continue
                    ext = _closure(G.table, base | {g})
                    if ext not in found:
                        found.add(ext)
                        queue.append(ext)
            ordered = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
            G.__dict__["_all_subgroups"] = [Subgroup(G, s) for s in ordered]
    return list(G.__dict__["_all_subgroups"])


# ---------------------------------------------------------------------------
# Cosets
# ---------------------------------------------------------------------------


def right_cosets(G: Group, H: Subgroup) -> list[Coset]:
    """The partition of G into right cosets Hx; the identity's coset first,
    the rest ordered by minimal member (which is the representative)."""
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    members = list(H.members)
    seen = [False] * G.order
    cosets: list[Coset] = []
    ident = tuple(sorted(G.mul(h, G.identity) for h in members))
    for v in ident:
        seen[v] = True
    cosets.append(Coset(min(ident), ident))
    for x in range(G.order):
        if seen[x]:
            continue
        mem = tuple(sorted(G.mul(h, x) for h in members))
        for v in mem:
            seen[v] = True
        cosets.append(Coset(mem[0], mem))
    return cosets


def right_transversal(G: Group, H: Subgroup) -> list[int]:
    """Minimal-index representatives of the right cosets, identity's first."""
    return [c.representative for c in right_cosets(G, H)]


def coset_square_membership(G: Group, H: Subgroup, x: int) -> bool:
    """Whether x*x lies in H (constant across the coset Hx when H is normal)."""
    return G.mul(x, x) in H


def coset_has_involution(G: Group, H: Subgroup, x: int) -> bool:
    """Whether the coset Hx contains an element of order 2."""
    inv2 = G.involution_set
    return any(G.mul(h, x) in inv2 for h in H.members)


# ---------------------------------------------------------------------------
# Abelian structure
# ---------------------------------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def abelian_type(G: Group) -> AbelianType:
    """Recognise the isomorphism type of an abelian group.

    Derived from the multiset of element orders: for each prime p the
    count of elements killed by p^k determines how many cyclic factors
    have exponent >= k, which pins the primary decomposition.
    """
    if not G.abelian:
        raise NotAbelianError("abelian_type requires an abelian group")
    n = G.order
    orders = G.element_orders
    primary: list[tuple[int, tuple[int, ...]]] = []
    for p in _prime_factors(n):
        counts = [1]  # counts[k] = #{g : order(g) divides p^k}
        pk = 1
        while True:
            pk *= p
            c = sum(1 for o in orders if pk % o == 0)
            counts.append(c)
            if c == counts[-2]:
                counts.pop()
                break
        logs = [c.bit_length() - 1 if p == 2 else round(math.log(c, p)) for c in counts]
        at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
        at_least.append(0)
        exps: list[int] = []
        for k in range(1, len(at_least) + 1):
            if k - 1 < len(at_least) - 1:
                exps.extend([k] * (at_least[k - 1] - at_least[k]))
        primary.append((p, tuple(sorted(exps))))
    width = max((len(e) for _, e in primary), default=0)
    factors = []
    for j in range(width):
        f = 1
        for p, exps in primary:
            padded = (0,) * (width - len(exps)) + exps
            f *= p ** padded[j]
        factors.append(f)
    sylow_two = Subgroup(G, [g for g, o in enumerate(orders) if o & (o - 1) == 0])
    odd_part = Subgroup(G, [g for g, o in enumerate(orders) if o % 2 == 1])
    return AbelianType(
        invariant_factors=tuple(f for f in factors if f > 1),
        primary=tuple(primary),
        sylow_two=sylow_two,
        odd_part=odd_part,
    )


def is_dedekind(G: Group) -> bool:
    """Whether every subgroup is normal (checked on cyclic subgroups)."""
    rows = G.rows
    for g in range(G.order):
        powers = {G.identity}
        x = g
        while x != G.identity:
            powers.add(x)
            x = rows[x][g]
        for y in range(G.order):
            if rows[rows[G.inv(y)][g]][y] not in powers:
                return False
    return True


def subgroup_as_group(G: Group, H: Subgroup, tag: Tag | None = None) -> tuple[Group, dict[int, int]]:
    """Restrict the table to H's members and reindex them densely.

    Returns the new group and the mapping from parent indices to new ones.
    """
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    mapping = {old: new for new, old in enumerate(H.members)}
    idx = np.fromiter(H.members, dtype=np.int64)
    sub_table = G.table[np.ix_(idx, idx)]
    relabeled = np.vectorize(mapping.__getitem__)(sub_table) if len(idx) else sub_table
    labels = [G.labels[m] for m in H.members]
    return group_from_cayley_table(relabeled, labels, tag), mapping


def _partitions(k: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    out = []

    def rec(rest: int, largest: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rest, largest), 0, -1):
            rec(rest - part, part, acc + [part])

    rec(k, k, [])
    return out


def abelian_isomorphism_types(max_order: int) -> list[tuple[int, ...]]:
    """Every abelian group of order <= max_order, one tuple of prime-power
    cyclic factor orders (ascending) per isomorphism type."""
    types: list[tuple[int, ...]] = []
    for n in range(1, max_order + 1):
        per_prime: list[list[tuple[int, ...]]] = []
        for p in _prime_factors(n):
            k, m = 0, n
            while m % p == 0:
                m //= p
                k += 1
            per_prime.append([tuple(p**e for e in part) for part in _partitions(k)])
        combos: list[tuple[int, ...]] = [()]
        for options in per_prime:
            combos = [c + opt for c in combos for opt in options]
        for combo in combos:
            types.append(tuple(sorted(combo)))
    return types
