"""Closed-form code deciders for specific group families.

Each decider answers "does the sum graph admit a perfect (or total perfect)
code?" from arithmetic on the family's parameters alone, without building
the graph.  They deliberately duplicate ground covered by the generic
deciders in :mod:`sumgraph.codes` so the two can be cross-checked; the test
suite runs every family decider against the generic one and the brute-force
oracle over its whole family at desk scale.

Abelian 2-group subgroups use the mixed-radix element indexing fixed by
:func:`sumgraph.groups.abelian` (last factor varies fastest).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import (
    BadParameterError,
    InternalInconsistencyError,
    NotAbelianError,
    NotASubgroupError,
    NotDedekindError,
    NotNormalError,
)
from .groups import (
    Group,
    Subgroup,
    abelian_type,
    is_dedekind,
    max_supported_order,
    normal_subgroups,
    right_cosets,
)

__all__ = [
    "cyclic_perfect_code",
    "abelian_2group_perfect_code",
    "coordinate_product_form",
    "dihedral_perfect_code",
    "dicyclic_perfect_code",
    "abelian_total_perfect_code",
    "order_three_coset_scan",
    "is_code_perfect",
]


def cyclic_perfect_code(n: int, a: int) -> bool:
    """Does the sum graph of Z_n over H = <a> admit a perfect code?

    ``a`` is the least positive member of H, hence a divisor of n, with
    a = n encoding the trivial subgroup.  True exactly when n is odd, or
    |H| = n/a is odd, or |H| = 2, or |H| >= 4 is even with a odd.
    """
    if n < 1:
        raise BadParameterError(f"group order must be positive, got {n}")
    if a < 1 or a > n or n % a != 0:
        raise BadParameterError(f"{a} does not divide {n}, so it generates no canonical subgroup")
    order = n // a
    return n % 2 == 1 or order % 2 == 1 or order == 2 or a % 2 == 1


# ---------------------------------------------------------------------------
# Abelian 2-groups
# ---------------------------------------------------------------------------


def _decode(index: int, orders: Sequence[int]) -> tuple[int, ...]:
    out = []
    for f in reversed(orders):
        out.append(index % f)
        index //= f
    return tuple(reversed(out))


def _encode(coords: Sequence[int], orders: Sequence[int]) -> int:
    acc = 0
    for c, f in zip(coords, orders):
        acc = acc * f + c
    return acc


def _validate_2group_subgroup(
    invariants: Sequence[int], K: Subgroup | Iterable[int]
) -> tuple[tuple[int, ...], list[int]]:
    orders = tuple(int(f) for f in invariants)
    if len(orders) < 2:
        raise BadParameterError("the ambient group must be a non-cyclic abelian 2-group")
    for f in orders:
        if f < 2 or f & (f - 1):
            raise BadParameterError(f"factor orders must be powers of two >= 2, got {f}")
    n = math.prod(orders)
    if n > max_supported_order():
        raise BadParameterError(f"order {n} exceeds the supported cap")
    if isinstance(K, Subgroup):
        if K.parent.order != n:
            raise BadParameterError(
                f"subgroup lives in a group of order {K.parent.order}, expected {n}"
            )
        members = list(K.members)
    else:
        members = sorted({int(v) for v in K})
    if not members or members[0] < 0 or members[-1] >= n:
        raise BadParameterError(f"subgroup members must be indices in 0..{n - 1}")
    mset = set(members)
    if 0 not in mset:
        raise NotASubgroupError("member set does not contain the identity")
    coords = {m: _decode(m, orders) for m in members}
    for a in members:
        for b in members:
            s = _encode([(x + y) % f for x, y, f in zip(coords[a], coords[b], orders)], orders)
            if s not in mset:
                raise NotASubgroupError(f"not closed under products: {a} + {b} is outside")
    return orders, members


def abelian_2group_perfect_code(invariants: Sequence[int], K: Subgroup | Iterable[int]) -> bool:
    """Does the sum graph of a non-cyclic abelian 2-group over K have a perfect code?

    ``invariants`` are the cyclic factor orders (powers of two, at least
    two factors); ``K`` a subgroup of order at least 3, as a Subgroup or as
    mixed-radix element indices.  A perfect code exists exactly when every
    element whose double lies in K is itself within K plus the socle
    {w : 2w = 0}: such elements head the cosets whose blocks are complete
    graphs, and the socle shift is what supplies each block's self-paired
    vertex.  (Coordinate-aligned subgroups are the easy special case; the
    condition here is basis-free and also settles the diagonal ones.)
    """
    orders, members = _validate_2group_subgroup(invariants, K)
    if len(members) < 3:
        raise BadParameterError("the decider applies to subgroups of order at least 3")
    n = math.prod(orders)
    mset = set(members)

    def double(i: int) -> int:
        return _encode([(2 * c) % f for c, f in zip(_decode(i, orders), orders)], orders)

    socle = [i for i in range(n) if double(i) == 0]
    reach = set()
    for k in members:
        kc = _decode(k, orders)
        for w in socle:
            wc = _decode(w, orders)
            reach.add(_encode([(x + y) % f for x, y, f in zip(kc, wc, orders)], orders))
    return all(double(x) not in mset or x in reach for x in range(n))


def coordinate_product_form(
    invariants: Sequence[int], K: Subgroup | Iterable[int]
) -> tuple[int, ...] | None:
    """Per-coordinate projection orders when K is the product of its projections.

    Returns one order per factor if K splits coordinate-wise, else None.
    A split subgroup whose projections are each trivial or the full factor
    is the easy positive case of :func:`abelian_2group_perfect_code`.
    """
    orders, members = _validate_2group_subgroup(invariants, K)
    coords = [_decode(m, orders) for m in members]
    projections = [sorted({c[i] for c in coords}) for i in range(len(orders))]
    if math.prod(len(p) for p in projections) != len(members):
        return None
    return tuple(len(p) for p in projections)


# ---------------------------------------------------------------------------
# Dihedral and dicyclic groups
# ---------------------------------------------------------------------------


def _cyclic_part_verdict(subgroup_order: int, step: int) -> bool:
    """Shared arithmetic for a subgroup <a^step> of order ``subgroup_order``
    inside the rotation subgroup: code exists iff the order is odd, equals
    2, or is even >= 4 with the step odd."""
    return subgroup_order % 2 == 1 or subgroup_order == 2 or step % 2 == 1


def dihedral_perfect_code(G: Group, H: Subgroup) -> bool:
    """Does the sum graph of a dihedral group over normal H have a perfect code?

    True for H = G, for the two index-2 mixed subgroups that exist when the
    rotation order n is even, and for rotation subgroups <a^t> exactly when
    n/t is odd, equals 2, or is even >= 4 with t odd.
    """
    if G.tag.kind != "dihedral":
        raise BadParameterError("expected a group built by the dihedral constructor")
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    if not H.is_normal:
        raise NotNormalError("subgroup is not normal in the dihedral group")
    n = G.tag.param
    if H.order == 2 * n:
        return True
    if all(m < n for m in H.members):
        return _cyclic_part_verdict(H.order, n // H.order)
    even_rotations = set(range(0, n, 2))
    half_b = even_rotations | {n + i for i in range(0, n, 2)}
    half_ab = even_rotations | {n + i for i in range(1, n, 2)}
    if set(H.members) in (half_b, half_ab):
        return True
    raise InternalInconsistencyError(
        "a normal mixed proper subgroup escaped the dihedral catalogue"
    )


def dicyclic_perfect_code(G: Group, H: Subgroup) -> bool:
    """Does the sum graph of a dicyclic group over normal H have a perfect code?

    True exactly for H = G and for subgroups of <a> of odd order or order 2.
    """
    if G.tag.kind != "dicyclic":
        raise BadParameterError("expected a group built by the dicyclic constructor")
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    if not H.is_normal:
        raise NotNormalError("subgroup is not normal in the dicyclic group")
    n = G.tag.param
    if H.order == 4 * n:
        return True
    if all(m < 2 * n for m in H.members):
        return H.order % 2 == 1 or H.order == 2
    return False


# ---------------------------------------------------------------------------
# Total perfect codes in abelian groups
# ---------------------------------------------------------------------------


def _elementary_two_times_three(A: Group) -> bool:
    primary = dict(abelian_type(A).primary)
    if set(primary) - {2, 3}:
        return False
    if primary.get(3) != (1,):
        return False
    return all(e == 1 for e in primary.get(2, ()))


def abelian_total_perfect_code(A: Group, H: Subgroup) -> bool:
    """Does the sum graph of abelian A over H admit a total perfect code?

    True when |H| = 2 and no element outside H squares into H without being
    an involution (the matching is then perfect), or when |H| = 3 and A is
    a product of Z2 factors with one Z3 (every block is then a 3-star).
    """
    if not A.abelian:
        raise NotAbelianError("this decider applies to abelian groups only")
    if H.parent is not A:
        raise NotASubgroupError("subgroup belongs to a different group")
    if H.order == 2:
        for x in range(A.order):
            if x in H:
                continue
            sq = A.mul(x, x)
            if sq in H and sq != A.identity:
                return False
        return True
    if H.order == 3:
        return _elementary_two_times_three(A)
    return False


def order_three_coset_scan(G: Group, H: Subgroup) -> bool:
    """Structural scan behind the order-3 total-code shape.

    For normal H of order 3: every element outside H must square into H,
    and every coset must contain an element of order at least 3 (so each
    block is a 3-star rather than a triangle).  Equivalent, by the theory
    and by the test suite's sweep, to G being Z2-factors times one Z3.
    """
    if H.order != 3:
        raise BadParameterError(f"the scan applies to subgroups of order 3, got {H.order}")
    if not H.is_normal:
        raise NotNormalError("the scan applies to normal subgroups")
    G_ = H.parent
    for x in range(G_.order):
        if x not in H and G_.mul(x, x) not in H:
            return False
    for coset in right_cosets(G_, H):
        if all(G_.element_orders[v] <= 2 for v in coset.members):
            return False
    return True


# ---------------------------------------------------------------------------
# Code-perfect groups
# ---------------------------------------------------------------------------


def is_code_perfect(G: Group, method: str = "bruteforce") -> bool:
    """Does every normal subgroup of G yield a perfect code in its sum graph?

    The ``bruteforce`` method decides each normal subgroup directly.  The
    ``dedekind`` method uses the classification available for groups whose
    subgroups are all normal: exactly Z4 and the products of Z2 factors
    with an odd abelian group qualify; non-abelian Dedekind groups never do.
    """
    if method == "bruteforce":
        from .codes import decide_perfect_code

        return all(decide_perfect_code(G, H).exists for H in normal_subgroups(G))
    if method == "dedekind":
        if not is_dedekind(G):
            raise NotDedekindError("the dedekind method requires all subgroups normal")
        if not G.abelian:
            return False
        at = abelian_type(G)
        if at.invariant_factors == (4,):
            return True
        return all(e == 1 for e in at.exponents_at(2))
    raise BadParameterError(f"unknown method {method!r}; use 'bruteforce' or 'dedekind'")
