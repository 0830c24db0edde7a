"""Uniqueness of the Eulerian circuit and maximal safe walks.

An edge pair ((u,v),(v,w)) is forced (appears in every Eulerian circuit)
exactly when it appears in some circuit and v has degree 1, or degree 2 and
is a cut node of the underlying undirected graph. The set of nodes
satisfying that degree/cut condition characterizes uniqueness (all nodes in
the set) and gives the cutting points for maximal safe walks.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .circuit import _hierholzer
from .graph import (
    ContractError,
    Graph,
    NormalizationMap,
    normalize,
    require_eulerian,
    require_simple,
)
from .undirected import UGraph, articulation_flags, component_split, underlying_undirected


@dataclass(frozen=True)
class NodeClass:
    """Per-node degree and cut status; ``in_a`` marks forcing nodes."""

    label: str
    degree: int
    is_cut: bool
    in_a: bool


@dataclass(frozen=True)
class SafeWalkReport:
    """Maximal safe walks as edge-id sequences, plus conservation metadata.

    Walks are pairwise edge-disjoint and cover every edge, so
    ``total_edge_length`` always equals |E|. When ``unique_circuit`` is
    true the single walk is the full circuit (anchored at edge id 0).
    """

    walks: tuple[tuple[int, ...], ...]
    unique_circuit: bool
    total_edge_length: int


@dataclass(frozen=True)
class SafetyEvidence:
    """Verdict for one consecutive edge pair, with the reason it holds.

    Reason codes: ``degree-one``, ``cut-split``, ``degree-too-high``,
    ``not-forced`` (middle node has degree 2 but is not a cut node),
    ``not-in-any-circuit`` (endpoints on the same side of the cut) and
    ``edges-missing``. Component ids are filled in for the cut cases.
    """

    safe: bool
    reason: str
    component_u: Optional[int] = None
    component_w: Optional[int] = None


def _node_class_arrays(g: Graph) -> tuple[list[int], list[bool], list[bool]]:
    """(degree, cut flag, forcing flag) per node id; validates contracts."""
    out_adj = g.out_adj
    in_adj = g.in_adj
    for v in range(g.num_nodes):
        if len(out_adj[v]) != len(in_adj[v]):
            raise ContractError(
                f"graph is not Eulerian: node '{g.labels[v]}' has out-degree "
                f"{len(out_adj[v])} and in-degree {len(in_adj[v])}"
            )
    require_simple(g)
    # The cut-node DFS doubles as the weak-connectivity part of the
    # Eulerian check, avoiding a separate traversal.
    try:
        cut = articulation_flags(underlying_undirected(g))
    except ContractError:
        raise ContractError(
            "graph is not Eulerian: the underlying undirected graph is not connected"
        ) from None
    degrees = [len(edges) for edges in out_adj]
    in_a = [d == 1 or (d == 2 and c) for d, c in zip(degrees, cut)]
    return degrees, cut, in_a


def classify_nodes(g: Graph) -> dict[str, NodeClass]:
    """Degree, cut-node status and forcing membership for every node."""
    degrees, cut, in_a = _node_class_arrays(g)
    return {
        label: NodeClass(label=label, degree=degrees[v], is_cut=cut[v], in_a=in_a[v])
        for v, label in enumerate(g.labels)
    }


class SafePairChecker:
    """Answers consecutive-pair safety queries against one graph.

    The node classification is computed once; component splits are computed
    per queried cut node and cached, so a batch of queries over the same
    graph costs O(|E|) per distinct degree-2 cut node.
    """

    def __init__(self, g: Graph):
        self.g = g
        self._degrees, self._cut, _ = _node_class_arrays(g)
        self._u: Optional[UGraph] = None
        self._splits: dict[int, dict[str, int]] = {}

    def _split_components(self, v: int) -> dict[str, int]:
        cached = self._splits.get(v)
        if cached is None:
            if self._u is None:
                self._u = underlying_undirected(self.g)
            cached = component_split(self._u, self.g.labels[v]).component
            self._splits[v] = cached
        return cached

    def check(self, e1: int, e2: int) -> SafetyEvidence:
        g = self.g
        m = g.num_edges
        if not (0 <= e1 < m and 0 <= e2 < m):
            return SafetyEvidence(False, "edges-missing")
        if e1 == e2:
            raise ContractError("the two edges of a pair must be distinct")
        if g.heads[e1] != g.tails[e2]:
            raise ContractError("edges are not consecutive: head of the first must be tail of the second")
        v = g.heads[e1]
        d = self._degrees[v]
        if d == 1:
            return SafetyEvidence(True, "degree-one")
        if d >= 3:
            return SafetyEvidence(False, "degree-too-high")
        if not self._cut[v]:
            return SafetyEvidence(False, "not-forced")
        comp = self._split_components(v)
        cu = comp[g.labels[g.tails[e1]]]
        cw = comp[g.labels[g.heads[e2]]]
        if cu != cw:
            return SafetyEvidence(True, "cut-split", component_u=cu, component_w=cw)
        return SafetyEvidence(False, "not-in-any-circuit", component_u=cu, component_w=cw)


def is_safe_pair(g: Graph, e1: int, e2: int) -> SafetyEvidence:
    """Does the edge pair (e1, e2) appear in every Eulerian circuit?

    ``e1`` must end where ``e2`` starts. For repeated queries on one graph
    use :class:`SafePairChecker`, which shares the precomputation.
    """
    return SafePairChecker(g).check(e1, e2)


def has_unique_eulerian_circuit(g: Graph) -> bool:
    """Decide uniqueness of the Eulerian circuit in O(|E|).

    Accepts raw multigraphs: any parallel edge pair means at least two
    circuits; a self-loop is tolerated only at a node of degree at most 2. The remaining decision is whether every node of
    the normalized graph is forcing.
    """
    require_eulerian(g)
    n = g.num_nodes
    seen: set[int] = set()
    for e in range(g.num_edges):
        t = g.tails[e]
        h = g.heads[e]
        if t == h:
            # Degree 1 can only be a lone self-loop, which is unique; degree
            # 2 defers to the normalized graph; higher degrees never are.
            if len(g.out_adj[t]) > 2:
                return False
        else:
            key = t * n + h
            if key in seen:
                return False
            seen.add(key)
    ng, _ = normalize(g)
    _, _, in_a = _node_class_arrays(ng)
    return all(in_a)


def maximal_safe_walks(
    g: Graph,
    norm_map: Optional[NormalizationMap] = None,
    rng: Optional[random.Random] = None,
) -> SafeWalkReport:
    """Compute all maximal safe walks in O(|E|).

    One Eulerian circuit is built and cut at every occurrence of a
    non-forcing node, keeping a copy of the node as an endpoint of both
    neighboring segments. If there is no cutting point the circuit is
    unique and reported whole. With ``norm_map`` the walks are projected
    back to original edge ids.
    """
    _, _, in_a = _node_class_arrays(g)
    circuit = _hierholzer(g, rng=rng)
    edges = circuit.edges
    tails = g.tails
    cut_positions = [i for i in range(len(edges)) if not in_a[tails[edges[i]]]]
    if not cut_positions:
        walks: tuple[tuple[int, ...], ...] = (edges,)
        unique = True
    else:
        k = len(edges)
        segments = []
        for idx, a in enumerate(cut_positions):
            b = cut_positions[idx + 1] if idx + 1 < len(cut_positions) else cut_positions[0] + k
            segments.append(edges[a:b] if b <= k else edges[a:] + edges[: b - k])
        walks = tuple(segments)
        unique = False
    if norm_map is not None and not norm_map.is_identity:
        walks = tuple(norm_map.project(w, circular=unique) for w in walks)
    total = sum(len(w) for w in walks)
    return SafeWalkReport(walks=walks, unique_circuit=unique, total_edge_length=total)
