"""Sum graphs over a normal subgroup, plus structure verification.

Given a group G and a normal subgroup H, the *sum graph* joins distinct
x and y whenever x*y lands in H minus the identity; the *extended* variant
keeps the identity, i.e. joins x and y whenever x*y is in H at all.
Normality makes the relation symmetric, so both are simple graphs on G.

Adjacency is stored as one Python int bitmask per vertex, which keeps the
set algebra (component sweeps, code checking) branch-free and fast for the
orders this package supports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalInconsistencyError, NotASubgroupError, NotNormalError
from .groups import Group, Subgroup, right_cosets

__all__ = [
    "SumGraph",
    "build_graph",
    "components",
    "BlockRecord",
    "StructureReport",
    "verify_structure",
    "graph_to_json",
    "to_dot",
]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        out.append(v)
        mask &= mask - 1
    return out


class SumGraph:
    """A simple graph on the elements of a group, one bitmask row per vertex."""

    def __init__(self, group: Group, subgroup: Subgroup, extended: bool, rows: tuple[int, ...]):
        self.group = group
        self.subgroup = subgroup
        self.extended = extended
        self.n = group.order
        self.rows = rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)  # neighbours above u
            out.extend((u, v) for v in _bits(row))
        return out

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __repr__(self) -> str:
        kind = "extended sum graph" if self.extended else "sum graph"
        return f"<{kind} on {self.group!r} over subgroup of order {self.subgroup.order}>"


def build_graph(G: Group, H: Subgroup, extended: bool = False) -> SumGraph:
    """Construct the (extended) sum graph of G over the normal subgroup H."""
    if H.parent is not G:
        raise NotASubgroupError("subgroup belongs to a different group")
    if not H.is_normal:
        raise NotNormalError(
            "subgroup is not normal, so the adjacency relation is not symmetric"
        )
    in_h = np.zeros(G.order, dtype=bool)
    in_h[list(H.members)] = True
    adj = in_h[G.table]
    if not extended:
        adj &= G.table != G.identity
    np.fill_diagonal(adj, False)
    if not np.array_equal(adj, adj.T):
        raise InternalInconsistencyError("adjacency came out asymmetric for a normal subgroup")
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = tuple(int.from_bytes(packed[v].tobytes(), "little") for v in range(G.order))
    return SumGraph(G, H, extended, rows)


def components(graph: SumGraph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    remaining = (1 << graph.n) - 1
    out = []
    while remaining:
        start = remaining & -remaining
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            reached = 0
            for v in _bits(frontier):
                reached |= graph.rows[v]
            frontier = reached & ~comp
        remaining &= ~comp
        out.append(tuple(_bits(comp)))
    return out


# ---------------------------------------------------------------------------
# Block structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockRecord:
    """One coset unit of one graph flavour, with its verified shape.

    A *unit* is a single coset Hx when x*x lies in H (the coset is then
    closed under inverses) and the pair Hx and Hx^-1 otherwise.  ``kind``
    names the shape the adjacency actually matched:

    * ``complete``                           -- all pairs joined
    * ``complete_minus_matching``            -- complete, minus the pairing
      of each vertex with its (distinct) inverse
    * ``complete_bipartite``                 -- all cross pairs joined
    * ``bipartite_minus_perfect_matching``   -- cross pairs minus inverses
    * ``other``                              -- none of the above; see witness

    ``square_universal_divergence`` lists vertices of plain one-coset units
    that are squares in G yet not adjacent to every other unit vertex, or
    vice versa; the two predicates coincide for many groups but not all, so
    the report records where they part ways instead of asserting.
    """

    flavor: str  # "plain" | "extended"
    vertices: tuple[int, ...]
    coset_representatives: tuple[int, ...]
    square_in_subgroup: bool
    kind: str
    matches: bool
    witness: tuple[str, int, int] | None
    square_universal_divergence: tuple[int, ...]


@dataclass(frozen=True)
class StructureReport:
    """Every block of both graph flavours, checked edge-for-edge."""

    group_order: int
    subgroup_members: tuple[int, ...]
    blocks: tuple[BlockRecord, ...]
    all_match: bool
    divergent_vertices: tuple[int, ...]


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_block(
    G: Group,
    graph: SumGraph,
    flavor: str,
    unit: list,
    square_in: bool,
) -> BlockRecord:
    vertices = tuple(sorted(v for c in unit for v in c.members))
    reps = tuple(c.representative for c in unit)
    unit_mask = _mask_of(vertices)
    extended = flavor == "extended"

    expected: dict[int, int] = {}
    if square_in:
        for v in vertices:
            exp = unit_mask & ~(1 << v)
            if not extended:
                exp &= ~(1 << G.inv(v))
            expected[v] = exp
        if extended:
            kind = "complete"
        elif all(G.inv(v) == v for v in vertices):
            kind = "complete"
        else:
            kind = "complete_minus_matching"
    else:
        side = {v: i for i, c in enumerate(unit) for v in c.members}
        masks = [_mask_of(c.members) for c in unit]
        for v in vertices:
            exp = masks[1 - side[v]]
            if not extended:
                exp &= ~(1 << G.inv(v))
            expected[v] = exp
        kind = "complete_bipartite" if extended else "bipartite_minus_perfect_matching"

    witness = None
    for v in vertices:
        actual = graph.rows[v]
        if actual == expected[v]:
            continue
        extra = actual & ~expected[v]
        if extra:
            witness = ("unexpected-edge", v, _bits(extra)[0])
        else:
            witness = ("missing-edge", v, _bits(expected[v] & ~actual)[0])
        kind = "other"
        break

    divergence: tuple[int, ...] = ()
    if flavor == "plain" and square_in and witness is None:
        sq = G.square_set
        full = [v for v in vertices if graph.rows[v] & unit_mask == unit_mask & ~(1 << v)]
        full_set = set(full)
        divergence = tuple(
            v for v in vertices if (v in sq) != (v in full_set)
        )

    return BlockRecord(
        flavor=flavor,
        vertices=vertices,
        coset_representatives=reps,
        square_in_subgroup=square_in,
        kind=kind,
        matches=witness is None,
        witness=witness,
        square_universal_divergence=divergence,
    )


def verify_structure(G: Group, H: Subgroup) -> StructureReport:
    """Predict every block of both sum-graph flavours and compare exactly.

    Units are built from the right cosets: Hx alone when x*x is in H, the
    pair {Hx, Hx^-1} otherwise.  The predicted adjacency of every vertex is
    compared bit-for-bit against the built graph, so any leaked edge between
    units or missing edge inside one is caught and reported as a witness.
    """
    plain = build_graph(G, H, extended=False)
    extended = build_graph(G, H, extended=True)
    cosets = right_cosets(G, H)
    by_rep = {c.representative: c for c in cosets}
    rep_of = {}
    for c in cosets:
        for v in c.members:
            rep_of[v] = c.representative

    units: list[tuple[list, bool]] = []
    used = set()
    for c in cosets:
        if c.representative in used:
            continue
        x = c.representative
        if G.mul(x, x) in H:
            units.append(([c], True))
            used.add(x)
        else:
            partner = by_rep[rep_of[G.inv(x)]]
            units.append(([c, partner], False))
            used.add(x)
            used.add(partner.representative)

    blocks = []
    for unit, square_in in units:
        blocks.append(_check_block(G, plain, "plain", unit, square_in))
        blocks.append(_check_block(G, extended, "extended", unit, square_in))
    divergent = tuple(sorted({v for b in blocks for v in b.square_universal_divergence}))
    return StructureReport(
        group_order=G.order,
        subgroup_members=H.members,
        blocks=tuple(blocks),
        all_match=all(b.matches for b in blocks),
        divergent_vertices=divergent,
    )


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def graph_to_json(graph: SumGraph) -> dict:
    """A portable description: labels, subgroup, flavour, adjacency lists."""
    return {
        "group": str(graph.group.tag),
        "order": graph.n,
        "labels": list(graph.group.labels),
        "subgroup": list(graph.subgroup.members),
        "extended": graph.extended,
        "adjacency": [graph.neighbors(v) for v in range(graph.n)],
    }


_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def to_dot(graph: SumGraph, color_components: bool = False) -> str:
    """Render as Graphviz DOT; optionally colour vertices by component."""
    colour = {}
    if color_components:
        for i, comp in enumerate(components(graph)):
            for v in comp:
                colour[v] = _PALETTE[i % len(_PALETTE)]
    lines = ["graph sumgraph {"]
    lines.append('  node [shape=circle fontsize=10];')
    for v in range(graph.n):
        attrs = [f'label="{graph.group.labels[v]}"']
        if v in colour:
            attrs.append(f'style=filled fillcolor="{colour[v]}"')
        lines.append(f"  n{v} [{' '.join(attrs)}];")
    for u, v in graph.edges():
        lines.append(f"  n{u} -- n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
