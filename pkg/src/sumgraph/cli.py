"""Command-line front end.

Subcommands:

    normals    list the normal subgroups of a group
    graph      export a subgroup sum graph as DOT or JSON
    code       decide (or brute-force) a perfect-code question
    crosscheck run every decider against the brute-force oracle for one group
    scan       sweep whole families of groups, emitting JSON-lines records
    classify   code-perfect test for a whole group

Group expressions follow the grammar in :mod:`sumgraph.exprs` ("Z12",
"D12", "Dic3", "Q8", "E2^4", "Z4 x Z3", ...).  Subgroups are selected with
``gen:<label>[,<label>...]`` (subgroup generated by those elements) or
``index:<k>`` (k-th normal subgroup, 0-based, in canonical order).

Exit status: 0 on success, 1 if a crosscheck/scan found a disagreement,
2 on usage or domain errors (reported on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator, TextIO

from . import __version__
from .codes import (
    Verdict,
    cross_check,
    decide_code,
    find_perfect_code_bruteforce,
    find_total_perfect_code_bruteforce,
    verdict_to_json,
)
from .errors import BadParameterError, SumGraphError
from .exprs import build_group, format_group_expr, parse_group_expr
from .families import (
    abelian_2group_perfect_code,
    abelian_total_perfect_code,
    cyclic_perfect_code,
    dicyclic_perfect_code,
    dihedral_perfect_code,
    is_code_perfect,
)
from .graphs import build_graph, graph_to_json, to_dot
from .groups import (
    Group,
    Subgroup,
    abelian,
    abelian_isomorphism_types,
    cyclic,
    dicyclic,
    dihedral,
    normal_subgroups,
    subgroup_generated,
)

SCAN_FAMILIES = ("cyclic", "dihedral", "dicyclic", "abelian")
DEFAULT_SCAN_MAX_ORDER = 48


def _split_selector_labels(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(0, depth - 1)
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    parts.append("".join(current).strip())
    return parts


def resolve_subgroup(G: Group, selector: str) -> Subgroup:
    """Resolve ``gen:<labels>`` or ``index:<k>`` to a subgroup of G."""
    if selector.startswith("gen:"):
        labels = _split_selector_labels(selector[len("gen:"):])
        generators = []
        for label in labels:
            if not label:
                raise BadParameterError(f"empty label in selector {selector!r}")
            idx = G.label_index.get(label)
            if idx is None:
                raise BadParameterError(
                    f"no element labelled {label!r} in {G.tag} "
                    f"(labels look like {G.labels[min(1, G.order - 1)]!r})"
                )
            generators.append(idx)
        return subgroup_generated(G, generators)
    if selector.startswith("index:"):
        raw = selector[len("index:"):]
        try:
            k = int(raw)
        except ValueError:
            raise BadParameterError(f"subgroup index must be an integer, got {raw!r}") from None
        normals = normal_subgroups(G)
        if not 0 <= k < len(normals):
            raise BadParameterError(
                f"subgroup index {k} out of range: {G.tag} has {len(normals)} normal subgroups"
            )
        return normals[k]
    raise BadParameterError(
        f"bad subgroup selector {selector!r}: use gen:<label>[,<label>...] or index:<k>"
    )


def _minimal_generators(G: Group, H: Subgroup) -> list[int]:
    """A short generating set for H, grown greedily from its least members."""
    chosen: list[int] = []
    have = {G.identity}
    for v in H.members:
        if v in have:
            continue
        chosen.append(v)
        have = set(subgroup_generated(G, chosen).members)
        if len(have) == len(H):
            break
    return chosen


def _group_for(text: str) -> tuple[Group, str]:
    """Build the group named by ``text``; also return the canonical name.

    The canonical expression ("Q8", "E2^3") beats the structural tag as a
    display name: constructors without a dedicated tag kind fall back to a
    generic tag that prints nothing useful.
    """
    expr = parse_group_expr(text)
    return build_group(expr), format_group_expr(expr)


def _open_out(path: str | None) -> tuple[TextIO, bool]:
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


# ---------------------------------------------------------------------------
# subcommands


def _cmd_normals(args: argparse.Namespace) -> int:
    G, _ = _group_for(args.expr)
    for k, H in enumerate(normal_subgroups(G)):
        generators = _minimal_generators(G, H)
        record = {
            "index": k,
            "order": len(H),
            "members": list(H.members),
            "labels": [G.labels[v] for v in H.members],
            "generators": [G.labels[v] for v in generators],
        }
        print(json.dumps(record))
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    G, _ = _group_for(args.expr)
    H = resolve_subgroup(G, args.subgroup)
    graph = build_graph(G, H, extended=args.extended)
    if args.format == "dot":
        text = to_dot(graph, color_components=args.color_components)
    else:
        text = json.dumps(graph_to_json(graph), indent=2) + "\n"
    stream, owned = _open_out(args.out)
    try:
        stream.write(text)
    finally:
        if owned:
            stream.close()
    return 0


def _cmd_code(args: argparse.Namespace) -> int:
    G, name = _group_for(args.expr)
    H = resolve_subgroup(G, args.subgroup)
    if args.oracle:
        graph = build_graph(G, H, extended=args.extended)
        finder = find_total_perfect_code_bruteforce if args.total else find_perfect_code_bruteforce
        found = finder(graph)
        verdict = Verdict(
            flavor="extended" if args.extended else "plain",
            kind="total" if args.total else "perfect",
            exists=found is not None,
            rule="bruteforce-oracle",
            witness=found,
            certificate=None if found is not None else {"reason": "exhaustive-search-found-none"},
        )
    else:
        verdict = decide_code(G, H, extended=args.extended, total=args.total)
    payload = verdict_to_json(G, H, verdict)
    payload["group"]["tag"] = name
    if not args.construct:
        payload["witness"] = None
    print(json.dumps(payload, indent=2))
    return 0


_DECIDER_NAMES = {
    ("plain", "perfect"): "perfect",
    ("plain", "total"): "total",
    ("extended", "perfect"): "extended_perfect",
    ("extended", "total"): "extended_total",
}


def _entry_record(name: str, G: Group, entry) -> dict:
    record = {
        "group": name,
        "order": G.order,
        "subgroup": list(entry.subgroup),
        "decider": _DECIDER_NAMES[(entry.flavor, entry.kind)],
        "verdict": entry.decided,
        "oracle": entry.oracle,
        "agree": entry.agree,
    }
    if not entry.agree:
        record["rule"] = entry.rule
        record["certificate"] = entry.certificate
    return record


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    G, name = _group_for(args.expr)
    report = cross_check(G)
    for entry in report.entries:
        print(json.dumps(_entry_record(name, G, entry)))
    bad = report.disagreements
    print(
        f"crosscheck {name}: {len(report.entries)} checks, "
        f"{len(bad)} disagreements ({report.seconds:.2f}s)",
        file=sys.stderr,
    )
    return 1 if bad else 0


def _scan_groups(families: Iterable[str], max_order: int) -> Iterator[tuple[Group, str, dict]]:
    for family in families:
        if family == "cyclic":
            for n in range(1, max_order + 1):
                yield cyclic(n), family, {"n": n}
        elif family == "dihedral":
            n = 3
            while 2 * n <= max_order:
                yield dihedral(n), family, {"n": n}
                n += 1
        elif family == "dicyclic":
            n = 2
            while 4 * n <= max_order:
                yield dicyclic(n), family, {"n": n}
                n += 1
        elif family == "abelian":
            for factors in abelian_isomorphism_types(max_order):
                if len(factors) < 2:
                    continue  # single-factor types re-run the cyclic family
                yield abelian(factors), family, {"factors": factors}
        else:
            raise BadParameterError(
                f"unknown scan family {family!r}: choose from {', '.join(SCAN_FAMILIES)}"
            )


def _family_checks(G: Group, family: str, meta: dict, H: Subgroup) -> Iterator[tuple[str, bool, str]]:
    """Yield (decider name, verdict, oracle kind) triples for one subgroup."""
    if family == "cyclic":
        n = meta["n"]
        step = n if len(H) == 1 else min(v for v in H.members if v != 0)
        yield "family_cyclic", cyclic_perfect_code(n, step), "perfect"
        yield "family_abelian_total", abelian_total_perfect_code(G, H), "total"
    elif family == "dihedral":
        yield "family_dihedral", dihedral_perfect_code(G, H), "perfect"
    elif family == "dicyclic":
        yield "family_dicyclic", dicyclic_perfect_code(G, H), "perfect"
    elif family == "abelian":
        factors = meta["factors"]
        if len(H) >= 3 and all(f & (f - 1) == 0 for f in factors):
            yield "family_abelian_2group", abelian_2group_perfect_code(factors, H), "perfect"
        yield "family_abelian_total", abelian_total_perfect_code(G, H), "total"


def _cmd_scan(args: argparse.Namespace) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    for family in families:
        if family not in SCAN_FAMILIES:
            raise BadParameterError(
                f"unknown scan family {family!r}: choose from {', '.join(SCAN_FAMILIES)}"
            )
    if args.max_order < 1:
        raise BadParameterError("--max-order must be at least 1")
    stream, owned = _open_out(args.out)
    groups_seen = 0
    checks = 0
    disagreements = 0
    try:
        for G, family, meta in _scan_groups(families, args.max_order):
            groups_seen += 1
            group_name = str(G.tag)
            report = cross_check(G)
            oracle = {}
            for entry in report.entries:
                oracle[(entry.subgroup, entry.flavor, entry.kind)] = entry.oracle
                record = _entry_record(group_name, G, entry)
                checks += 1
                disagreements += not record["agree"]
                stream.write(json.dumps(record) + "\n")
            for H in normal_subgroups(G):
                for name, verdict, kind in _family_checks(G, family, meta, H):
                    truth = oracle[(H.members, "plain", kind)]
                    record = {
                        "group": group_name,
                        "order": G.order,
                        "subgroup": list(H.members),
                        "decider": name,
                        "verdict": verdict,
                        "oracle": truth,
                        "agree": verdict == truth,
                    }
                    checks += 1
                    disagreements += not record["agree"]
                    stream.write(json.dumps(record) + "\n")
    finally:
        if owned:
            stream.close()
    print(
        f"scan: {groups_seen} groups, {checks} checks, {disagreements} disagreements",
        file=sys.stderr,
    )
    return 1 if disagreements else 0


def _cmd_classify(args: argparse.Namespace) -> int:
    G, name = _group_for(args.expr)
    result = is_code_perfect(G, method=args.method)
    print(
        json.dumps(
            {
                "group": name,
                "order": G.order,
                "method": args.method,
                "code_perfect": result,
            }
        )
    )
    return 0


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumgraph",
        description="Perfect codes in subgroup sum graphs of finite groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normals", help="list normal subgroups as JSON lines")
    p.add_argument("expr", help='group expression, e.g. "Z12" or "Z4 x Z3"')
    p.set_defaults(func=_cmd_normals)

    p = sub.add_parser("graph", help="export a subgroup sum graph")
    p.add_argument("expr")
    p.add_argument("--subgroup", required=True, help="gen:<labels> or index:<k>")
    p.add_argument("--extended", action="store_true", help="use the extended graph")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--color-components", action="store_true", help="color DOT nodes by component")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("code", help="decide whether a perfect code exists")
    p.add_argument("expr")
    p.add_argument("--subgroup", required=True, help="gen:<labels> or index:<k>")
    p.add_argument("--extended", action="store_true", help="use the extended graph")
    p.add_argument("--total", action="store_true", help="ask for a total perfect code")
    p.add_argument("--construct", action="store_true", help="include a witness code if one exists")
    p.add_argument("--oracle", action="store_true", help="bypass the deciders; brute-force search")
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("crosscheck", help="deciders vs brute force for one group")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("scan", help="decider-vs-oracle sweep over group families")
    p.add_argument("--max-order", type=int, default=DEFAULT_SCAN_MAX_ORDER)
    p.add_argument(
        "--families",
        default=",".join(SCAN_FAMILIES),
        help=f"comma-separated subset of: {', '.join(SCAN_FAMILIES)}",
    )
    p.add_argument("--out", help="write JSON lines to this file instead of stdout")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("classify", help="whole-group classification")
    p.add_argument("what", choices=("code-perfect",), help="property to test")
    p.add_argument("expr")
    p.add_argument("--method", choices=("bruteforce", "dedekind"), default="bruteforce")
    p.set_defaults(func=_cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SumGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
