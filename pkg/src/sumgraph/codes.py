"""Perfect and total perfect codes in sum graphs.

A *perfect code* of a graph is an independent set C such that every vertex
outside C has exactly one neighbour inside; equivalently the closed
neighbourhoods of C's members partition the vertex set.  A *total perfect
code* requires every vertex -- members of C included -- to have exactly one
neighbour in C, i.e. the open neighbourhoods partition the vertex set.

Each flavour/kind combination has a fast decider that reads the answer off
the group structure, produces an explicit witness code when one exists and
a small refuting certificate when none does.  Brute-force searchers (exact
cover over neighbourhoods, component by component) double as independent
oracles; :func:`cross_check` runs deciders against oracles over every
normal subgroup of a group.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import (
    InternalInconsistencyError,
    NotNormalError,
    PreconditionViolatedError,
)
from .graphs import SumGraph, build_graph, components
from .groups import (
    Group,
    Subgroup,
    abelian_type,
    normal_subgroups,
    right_cosets,
    right_transversal,
)

__all__ = [
    "Code",
    "Verdict",
    "is_perfect_code",
    "is_total_perfect_code",
    "find_perfect_code_bruteforce",
    "find_total_perfect_code_bruteforce",
    "decide_perfect_code",
    "decide_total_perfect_code",
    "decide_perfect_code_extended",
    "decide_total_perfect_code_extended",
    "decide_code",
    "construct_perfect_code",
    "verdict_to_json",
    "CrossCheckEntry",
    "CrossCheckReport",
    "cross_check",
]


@dataclass(frozen=True)
class Code:
    """A candidate code: sorted vertex indices plus which kind it claims to be."""

    vertices: tuple[int, ...]
    kind: str  # "perfect" | "total"

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices


@dataclass(frozen=True)
class Verdict:
    """Outcome of one decider: existence, the rule that settled it, evidence."""

    flavor: str  # "plain" | "extended"
    kind: str  # "perfect" | "total"
    exists: bool
    rule: str
    witness: Code | None
    certificate: dict | None


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return out


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# Validation and brute-force search
# ---------------------------------------------------------------------------


def is_perfect_code(graph: SumGraph, code) -> bool:
    """Whether the closed neighbourhoods of ``code`` partition the vertices."""
    full = (1 << graph.n) - 1
    covered = 0
    for c in code:
        nb = graph.rows[c] | (1 << c)
        if covered & nb:
            return False
        covered |= nb
    return covered == full


def is_total_perfect_code(graph: SumGraph, code) -> bool:
    """Whether the open neighbourhoods of ``code`` partition the vertices."""
    full = (1 << graph.n) - 1
    covered = 0
    for c in code:
        nb = graph.rows[c]
        if covered & nb:
            return False
        covered |= nb
    return covered == full


def _cover_component(graph: SumGraph, comp_mask: int, closed: bool) -> int | None:
    """Exact cover of one component by (closed or open) neighbourhoods.

    Branches on the dominators of the lowest uncovered vertex, ascending,
    so the first solution found is lexicographically least as a vertex set.
    """

    def rec(covered: int, chosen: int) -> int | None:
        rem = comp_mask & ~covered
        if not rem:
            return chosen
        v = (rem & -rem).bit_length() - 1
        candidates = graph.rows[v] | (1 << v) if closed else graph.rows[v]
        for c in _bits(candidates):
            nb = graph.rows[c] | (1 << c) if closed else graph.rows[c]
            if nb & covered:
                continue
            got = rec(covered | nb, chosen | (1 << c))
            if got is not None:
                return got
        return None

    return rec(0, 0)


def _find_code(graph: SumGraph, closed: bool) -> Code | None:
    chosen = 0
    for comp in components(graph):
        got = _cover_component(graph, _mask_of(comp), closed)
        if got is None:
            return None
        chosen |= got
    return Code(tuple(_bits(chosen)), "perfect" if closed else "total")


def find_perfect_code_bruteforce(graph: SumGraph) -> Code | None:
    """Search for a perfect code by exact cover, component by component."""
    return _find_code(graph, closed=True)


def find_total_perfect_code_bruteforce(graph: SumGraph) -> Code | None:
    """Search for a total perfect code by exact cover, component by component."""
    return _find_code(graph, closed=False)


# ---------------------------------------------------------------------------
# Deciders
# ---------------------------------------------------------------------------


def _require_normal(H: Subgroup) -> None:
    if not H.is_normal:
        raise NotNormalError("the sum graph is only defined over normal subgroups")


def _validated(G: Group, H: Subgroup, verdict: Verdict) -> Verdict:
    """Re-check a positive witness against the actual graph before returning."""
    if verdict.witness is not None:
        graph = build_graph(G, H, extended=verdict.flavor == "extended")
        ok = (
            is_total_perfect_code(graph, verdict.witness)
            if verdict.kind == "total"
            else is_perfect_code(graph, verdict.witness)
        )
        if not ok:
            raise InternalInconsistencyError(
                f"constructed witness fails validation: {verdict!r}"
            )
    return verdict


def _matching_code(graph: SumGraph) -> tuple[int, ...]:
    """Least endpoint of every edge plus all isolated vertices.

    Only valid when every vertex has degree at most one.
    """
    out = []
    for v in range(graph.n):
        row = graph.rows[v]
        if row == 0 or (row & -row).bit_length() - 1 > v:
            out.append(v)
    return tuple(out)


def decide_perfect_code(G: Group, H: Subgroup) -> Verdict:
    """Does the sum graph of G over H admit a perfect code?

    Positive for the trivial subgroup (empty graph: take everything) and
    for order two (the graph is a partial matching).  For larger H a code
    exists exactly when every coset Hx with x*x in H holds a self-inverse
    element; such an element dominates its whole block, while the paired
    blocks Hx with Hx^-1 are always handled by taking x and its inverse.
    """
    flavor, kind = "plain", "perfect"
    _require_normal(H)
    if H.order == 1:
        witness = Code(tuple(range(G.order)), kind)
        return _validated(G, H, Verdict(flavor, kind, True, "trivial-subgroup", witness, None))
    if H.order == 2:
        graph = build_graph(G, H)
        witness = Code(_matching_code(graph), kind)
        return _validated(G, H, Verdict(flavor, kind, True, "order-two-subgroup", witness, None))
    chosen: list[int] = []
    used = set()
    cosets = right_cosets(G, H)
    rep_of = {}
    for c in cosets:
        for v in c.members:
            rep_of[v] = c.representative
    for c in cosets:
        if c.representative in used:
            continue
        used.add(c.representative)
        x = c.representative
        if G.mul(x, x) in H:
            pivots = [v for v in c.members if G.inv(v) == v]
            if not pivots:
                return Verdict(
                    flavor,
                    kind,
                    False,
                    "square-coset-without-involution",
                    None,
                    {
                        "reason": "square-coset-without-involution",
                        "coset_representative": x,
                    },
                )
            chosen.append(pivots[0])
        else:
            used.add(rep_of[G.inv(x)])
            chosen.extend([x, G.inv(x)])
    witness = Code(tuple(sorted(chosen)), kind)
    return _validated(
        G, H, Verdict(flavor, kind, True, "square-cosets-have-involutions", witness, None)
    )


def _is_elementary_two_times_three(G: Group) -> bool:
    """Whether G is a direct product of copies of Z2 with a single Z3."""
    if not G.abelian:
        return False
    primary = dict(abelian_type(G).primary)
    if set(primary) - {2, 3}:
        return False
    if primary.get(3) != (1,):
        return False
    return all(e == 1 for e in primary.get(2, ()))


def decide_total_perfect_code(G: Group, H: Subgroup) -> Verdict:
    """Does the sum graph of G over H admit a total perfect code?

    For |H| = 2 the graph is a partial matching, and a total code exists
    exactly when the matching is perfect, i.e. no element squares to the
    non-identity member of H; the code is then everything.  The only other
    possibility is |H| = 3 with G a product of Z2 factors and one Z3: every
    block is then a three-vertex star, covered by its centre plus one leaf.
    """
    flavor, kind = "plain", "total"
    _require_normal(H)
    if H.order == 2:
        h = next(m for m in H.members if m != G.identity)
        for x in range(G.order):
            if G.mul(x, x) == h:
                return Verdict(
                    flavor,
                    kind,
                    False,
                    "square-element-not-involution",
                    None,
                    {"reason": "square-element-not-involution", "element": x},
                )
        witness = Code(tuple(range(G.order)), kind)
        return _validated(G, H, Verdict(flavor, kind, True, "order-two-matching", witness, None))
    if H.order == 3:
        if not _is_elementary_two_times_three(G):
            return Verdict(
                flavor,
                kind,
                False,
                "not-elementary-two-times-three",
                None,
                {"reason": "not-elementary-two-times-three", "group_order": G.order},
            )
        chosen = []
        for c in right_cosets(G, H):
            centre = next(v for v in c.members if G.inv(v) == v)
            leaf = min(v for v in c.members if v != centre)
            chosen.extend([centre, leaf])
        witness = Code(tuple(sorted(chosen)), kind)
        return _validated(
            G, H, Verdict(flavor, kind, True, "elementary-two-times-three", witness, None)
        )
    return Verdict(
        flavor,
        kind,
        False,
        "subgroup-order-unsuitable",
        None,
        {"reason": "subgroup-order-unsuitable", "subgroup_order": H.order},
    )


def decide_perfect_code_extended(G: Group, H: Subgroup) -> Verdict:
    """Does the extended sum graph of G over H admit a perfect code?

    With the trivial subgroup the graph pairs each element with its inverse,
    so picking the lesser of each pair works.  Otherwise a code exists
    exactly when every square lies in H: all blocks are then complete on
    one coset each, and any transversal is a code.
    """
    flavor, kind = "extended", "perfect"
    _require_normal(H)
    if H.order == 1:
        witness = Code(tuple(v for v in range(G.order) if G.inv(v) >= v), kind)
        return _validated(G, H, Verdict(flavor, kind, True, "trivial-subgroup", witness, None))
    outside = sorted(G.square_set - H.member_set)
    if not outside:
        witness = Code(tuple(sorted(right_transversal(G, H))), kind)
        return _validated(
            G, H, Verdict(flavor, kind, True, "squares-inside-subgroup", witness, None)
        )
    sq = outside[0]
    element = min(x for x in range(G.order) if G.mul(x, x) == sq)
    return Verdict(
        flavor,
        kind,
        False,
        "square-outside-subgroup",
        None,
        {"reason": "square-outside-subgroup", "element": element, "square": sq},
    )


def decide_total_perfect_code_extended(G: Group, H: Subgroup) -> Verdict:
    """Does the extended sum graph of G over H admit a total perfect code?

    Exactly when |H| = 2: components are then single edges or four-cycles,
    each of which carries a total code (found here by the component search).
    No other subgroup order works, whatever the group.
    """
    flavor, kind = "extended", "total"
    _require_normal(H)
    if H.order != 2:
        return Verdict(
            flavor,
            kind,
            False,
            "subgroup-order-not-two",
            None,
            {"reason": "subgroup-order-not-two", "subgroup_order": H.order},
        )
    graph = build_graph(G, H, extended=True)
    witness = find_total_perfect_code_bruteforce(graph)
    if witness is None:
        raise InternalInconsistencyError(
            "order-two subgroup yielded no total code in the extended graph"
        )
    return _validated(G, H, Verdict(flavor, kind, True, "order-two-subgroup", witness, None))


def decide_code(G: Group, H: Subgroup, extended: bool = False, total: bool = False) -> Verdict:
    """Dispatch to the decider for the requested flavour and kind."""
    if extended:
        if total:
            return decide_total_perfect_code_extended(G, H)
        return decide_perfect_code_extended(G, H)
    if total:
        return decide_total_perfect_code(G, H)
    return decide_perfect_code(G, H)


def construct_perfect_code(
    G: Group, H: Subgroup, extended: bool = False, total: bool = False
) -> Code:
    """The witness code from the decider; raises if none exists."""
    verdict = decide_code(G, H, extended=extended, total=total)
    if not verdict.exists or verdict.witness is None:
        raise PreconditionViolatedError(
            f"no {verdict.kind} code exists here (rule: {verdict.rule})"
        )
    return verdict.witness


def verdict_to_json(G: Group, H: Subgroup, verdict: Verdict) -> dict:
    return {
        "group": {"tag": str(G.tag), "order": G.order},
        "subgroup": list(H.members),
        "flavor": verdict.flavor,
        "kind": verdict.kind,
        "exists": verdict.exists,
        "rule": verdict.rule,
        "witness": list(verdict.witness.vertices) if verdict.witness is not None else None,
        "certificate": verdict.certificate,
    }


# ---------------------------------------------------------------------------
# Decider-versus-oracle sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrossCheckEntry:
    subgroup: tuple[int, ...]
    flavor: str
    kind: str
    decided: bool
    oracle: bool
    rule: str
    certificate: dict | None

    @property
    def agree(self) -> bool:
        return self.decided == self.oracle


@dataclass(frozen=True)
class CrossCheckReport:
    group: str
    group_order: int
    entries: tuple[CrossCheckEntry, ...]
    seconds: float

    @property
    def disagreements(self) -> tuple[CrossCheckEntry, ...]:
        return tuple(e for e in self.entries if not e.agree)

    @property
    def all_agree(self) -> bool:
        return not self.disagreements


def cross_check(G: Group, subgroups: list[Subgroup] | None = None) -> CrossCheckReport:
    """Run all four deciders against brute-force search over normal subgroups."""
    start = time.perf_counter()
    entries = []
    for H in subgroups if subgroups is not None else normal_subgroups(G):
        for extended in (False, True):
            graph = build_graph(G, H, extended=extended)
            for total in (False, True):
                verdict = decide_code(G, H, extended=extended, total=total)
                found = (
                    find_total_perfect_code_bruteforce(graph) if total else find_perfect_code_bruteforce(graph)
                )
                entries.append(
                    CrossCheckEntry(
                        subgroup=H.members,
                        flavor=verdict.flavor,
                        kind=verdict.kind,
                        decided=verdict.exists,
                        oracle=found is not None,
                        rule=verdict.rule,
                        certificate=verdict.certificate,
                    )
                )
    return CrossCheckReport(
        group=str(G.tag),
        group_order=G.order,
        entries=tuple(entries),
        seconds=time.perf_counter() - start,
    )
