"""Shared sweep builders for the test suite.

The heavyweight fixtures (every built-in group up to order 48, plus the
brute-force cross-check report for each) are computed once per test run
and shared by the module tests and the acceptance gate.
"""

from __future__ import annotations

from functools import cache

from sumgraph import (
    CrossCheckReport,
    Group,
    abelian,
    abelian_isomorphism_types,
    cross_check,
    cyclic,
    dicyclic,
    dihedral,
    quaternion,
)

SWEEP_MAX_ORDER = 48


@cache
def sweep_groups(max_order: int = SWEEP_MAX_ORDER) -> tuple[tuple[str, Group], ...]:
    """Every built-in group of order <= max_order, canonically ordered.

    Cyclic groups, dihedral and dicyclic groups in range, one group per
    abelian isomorphism type (the non-cyclic ones; cyclic types are already
    present), and the quaternion group.
    """
    out: list[tuple[str, Group]] = []
    for n in range(1, max_order + 1):
        out.append((f"Z{n}", cyclic(n)))
    n = 3
    while 2 * n <= max_order:
        out.append((f"D{2 * n}", dihedral(n)))
        n += 1
    n = 2
    while 4 * n <= max_order:
        out.append((f"Dic{n}", dicyclic(n)))
        n += 1
    for factors in abelian_isomorphism_types(max_order):
        if len(factors) < 2:
            continue
        name = " x ".join(f"Z{f}" for f in factors)
        out.append((name, abelian(factors)))
    out.append(("Q8", quaternion()))
    return tuple(out)


@cache
def sweep_reports(max_order: int = SWEEP_MAX_ORDER) -> tuple[tuple[str, Group, CrossCheckReport], ...]:
    """cross_check report for every sweep group (deciders vs brute force)."""
    return tuple((name, G, cross_check(G)) for name, G in sweep_groups(max_order))


def subset_perfect_codes(adjacency: list[list[int]]) -> list[tuple[int, ...]]:
    """All perfect codes of a small graph by raw subset enumeration.

    Independent implementation used to double-check the package's search:
    no bitmasks, no component split, just the definition over all 2^n
    subsets. Only usable for graphs with at most ~16 vertices.
    """
    n = len(adjacency)
    assert n <= 16, "subset enumeration is for small graphs only"
    found = []
    for pick in range(1 << n):
        chosen = [v for v in range(n) if pick >> v & 1]
        ok = True
        for v in range(n):
            hits = sum(1 for c in chosen if c == v or adjacency[v][c])
            if hits != 1:
                ok = False
                break
        if ok:
            found.append(tuple(chosen))
    return found


def subset_total_perfect_codes(adjacency: list[list[int]]) -> list[tuple[int, ...]]:
    """All total perfect codes of a small graph by raw subset enumeration."""
    n = len(adjacency)
    assert n <= 16, "subset enumeration is for small graphs only"
    found = []
    for pick in range(1 << n):
        chosen = [v for v in range(n) if pick >> v & 1]
        ok = True
        for v in range(n):
            hits = sum(1 for c in chosen if adjacency[v][c])
            if hits != 1:
                ok = False
                break
        if ok:
            found.append(tuple(chosen))
    return found


def adjacency_matrix(graph) -> list[list[int]]:
    """Dense 0/1 adjacency matrix of a SumGraph, for the subset checkers."""
    n = graph.n
    return [[1 if graph.has_edge(u, v) else 0 for v in range(n)] for u in range(n)]
