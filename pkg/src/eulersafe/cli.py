"""Command-line front end.

Exit codes: 0 for an affirmative verdict or success, 1 for a negative
verdict (not Eulerian, not unique, oracle mismatch, enumeration cap hit),
2 for usage, I/O, or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import generator, oracles, safety
from .circuit import canonical_rotation
from .graph import Graph, GraphError, ParseError, normalize, is_eulerian, parse_edge_list, walk_nodes


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def cmd_check(args) -> int:
    g = _load_graph(args.path)
    check = is_eulerian(g)
    if check.ok:
        print("eulerian")
        return 0
    print(f"not eulerian: {check.reason} ({check.detail})")
    return 1


def cmd_unique(args) -> int:
    g = _load_graph(args.path)
    if safety.has_unique_eulerian_circuit(g):
        print("unique")
        return 0
    print("not-unique")
    return 1


def cmd_safe(args) -> int:
    g = _load_graph(args.path)
    ng, norm_map = normalize(g)
    report = safety.maximal_safe_walks(ng, norm_map=norm_map)
    if args.format == "structured":
        _emit(
            record="header",
            edges=g.num_edges,
            walks=len(report.walks),
            total_length=report.total_edge_length,
            unique=report.unique_circuit,
        )
        for index, walk in enumerate(report.walks):
            _emit(
                record="walk",
                index=index,
                length=len(walk),
                edges=list(walk),
                nodes=walk_nodes(g, walk),
            )
    else:
        print(f"edges: {g.num_edges}")
        print(f"maximal safe walks: {len(report.walks)}")
        print(f"total length: {report.total_edge_length}")
        print(f"unique circuit: {'yes' if report.unique_circuit else 'no'}")
        for index, walk in enumerate(report.walks):
            nodes = " -> ".join(walk_nodes(g, walk))
            ids = " ".join(str(e) for e in walk)
            print(f"walk {index} (length {len(walk)}): {nodes} [edges {ids}]")
    return 0


def _emit(**fields) -> None:
    print(json.dumps(fields, sort_keys=True, separators=(",", ":")))


def cmd_count(args) -> int:
    g = _load_graph(args.path)
    ng, _ = normalize(g)
    if args.method == "best":
        print(oracles.count_best(ng).epsilon)
        return 0
    count, capped = oracles.count_eulerian_circuits(ng, cap=args.cap)
    if capped:
        print(f">= {count}")
        return 1
    print(count)
    return 0


def cmd_oracle_compare(args) -> int:
    g = _load_graph(args.path)
    ng, norm_map = normalize(g)
    if ng.num_edges > args.max_edges:
        print(f"skipped: enumeration infeasible (|E|={ng.num_edges} > {args.max_edges})")
        return 0

    failures = []
    enumerated = oracles.enumerate_eulerian_circuits(ng)
    best = oracles.count_best(ng)
    unique = safety.has_unique_eulerian_circuit(g)
    if best.epsilon != enumerated.count:
        failures.append(
            f"circuit count: determinant formula gives {best.epsilon}, "
            f"enumeration gives {enumerated.count}"
        )
    if unique != (enumerated.count == 1):
        failures.append(
            f"uniqueness: linear-time verdict {unique}, enumeration count {enumerated.count}"
        )
    report = safety.maximal_safe_walks(ng)
    brute = oracles.brute_force_safe_walks(ng)
    if _walk_multiset(report) != _walk_multiset(brute):
        failures.append("maximal safe walks differ from brute-force result")
    if report.total_edge_length != ng.num_edges:
        failures.append(
            f"conservation: walks cover {report.total_edge_length} of {ng.num_edges} edges"
        )
    intersection = oracles.pevzner_intersection_graph(ng)
    if intersection.is_tree != unique:
        # Advisory only: the cycle decomposition is not canonical.
        print(
            "warning: cycle-intersection tree test "
            f"({intersection.is_tree}) diverges from uniqueness verdict ({unique})"
        )
    if failures:
        print(f"FAIL: {failures[0]}")
        return 1
    print("PASS")
    return 0


def _walk_multiset(report: safety.SafeWalkReport):
    walks = report.walks
    if report.unique_circuit:
        walks = tuple(canonical_rotation(w) for w in walks)
    return sorted(walks)


def cmd_gen(args) -> int:
    edges = generator.random_eulerian_edges(args.nodes, args.cycles, seed=args.seed)
    text = generator.edge_list_text(edges)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulersafe",
        description="Eulerian circuit uniqueness and maximal safe walks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="is the graph Eulerian?")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("unique", help="does the graph have a unique Eulerian circuit?")
    p.add_argument("path")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("safe", help="compute all maximal safe walks")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_safe)

    p = sub.add_parser("count", help="count Eulerian circuits (rotation classes)")
    p.add_argument("path")
    p.add_argument("--method", choices=("best", "enumerate"), default="best")
    p.add_argument("--cap", type=int, default=1_000_000)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser(
        "oracle-compare", help="cross-check the linear-time results against oracles"
    )
    p.add_argument("path")
    p.add_argument("--max-edges", type=int, default=14)
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("gen", help="emit a random Eulerian multigraph edge list")
    p.add_argument("nodes", type=int)
    p.add_argument("cycles", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
