"""Directed multigraph model: parsing, normalization, Eulerian checks.

Node labels are opaque strings; internally they are mapped to dense integer
ids so that every algorithm in the package can use plain array indexing.
Edges are numbered 0..m-1 in insertion order and keep that identity through
normalization (via :class:`NormalizationMap`) and every downstream result.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(Exception):
    """Base class for errors raised by this package."""


class ParseError(GraphError):
    """Malformed edge-list input."""


class ContractError(GraphError):
    """A documented precondition was violated by the caller."""


class Graph:
    """Immutable directed multigraph with stable edge identities.

    ``labels[i]`` is the label of node id ``i`` (first-appearance order),
    ``tails[e]``/``heads[e]`` are the endpoint ids of edge ``e``, and
    ``out_adj[v]``/``in_adj[v]`` list the incident edge ids of ``v`` in
    ascending order. Instances must not be mutated after construction; they
    are safe to share between threads.
    """

    __slots__ = ("labels", "index", "tails", "heads", "out_adj", "in_adj", "_simple")

    def __init__(self, edges: Iterable[tuple[str, str]]):
        labels: list[str] = []
        index: dict[str, int] = {}
        # Compact int storage keeps large graphs cache-resident.
        tails = array("i")
        heads = array("i")
        for tail, head in edges:
            t = index.get(tail)
            if t is None:
                t = index[tail] = len(labels)
                labels.append(tail)
            h = index.get(head)
            if h is None:
                h = index[head] = len(labels)
                labels.append(head)
            tails.append(t)
            heads.append(h)
        if not tails:
            raise GraphError("graph must have at least one edge")
        out_adj: list[list[int]] = [[] for _ in labels]
        in_adj: list[list[int]] = [[] for _ in labels]
        for e in range(len(tails)):
            out_adj[tails[e]].append(e)
            in_adj[heads[e]].append(e)
        self.labels = labels
        self.index = index
        self.tails = tails
        self.heads = heads
        self.out_adj = out_adj
        self.in_adj = in_adj
        self._simple: Optional[bool] = None

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.tails)

    def edge(self, e: int) -> tuple[str, str]:
        """Endpoint labels (tail, head) of edge ``e``."""
        return self.labels[self.tails[e]], self.labels[self.heads[e]]

    def edge_pairs(self) -> Iterator[tuple[str, str]]:
        """All edges as (tail label, head label), in edge-id order."""
        for e in range(len(self.tails)):
            yield self.labels[self.tails[e]], self.labels[self.heads[e]]

    def out_degree(self, label: str) -> int:
        return len(self.out_adj[self.index[label]])

    def in_degree(self, label: str) -> int:
        return len(self.in_adj[self.index[label]])

    def is_simple(self) -> bool:
        """True iff the graph has no self-loop and no parallel edge pair."""
        if self._simple is None:
            self._simple = self._check_simple()
        return self._simple

    def _check_simple(self) -> bool:
        n = len(self.labels)
        seen: set[int] = set()
        for t, h in zip(self.tails, self.heads):
            if t == h:
                return False
            key = t * n + h
            if key in seen:
                return False
            seen.add(key)
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and list(self.edge_pairs()) == list(
            other.edge_pairs()
        )

    def __hash__(self) -> int:  # pragma: no cover - rarely needed
        return hash((tuple(self.labels), tuple(self.edge_pairs())))

    def __repr__(self) -> str:
        return f"Graph(nodes={len(self.labels)}, edges={len(self.tails)})"


@dataclass(frozen=True)
class Walk:
    """A head-to-tail consistent sequence of edge ids."""

    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Circuit(Walk):
    """A walk whose last edge ends where its first edge starts."""


def walk_nodes(g: Graph, edges: Sequence[int]) -> list[str]:
    """Node-label sequence (length k+1) visited by an edge-id walk."""
    if not edges:
        raise GraphError("walk must be non-empty")
    nodes = [g.labels[g.tails[edges[0]]]]
    for e in edges:
        nodes.append(g.labels[g.heads[e]])
    return nodes


def is_valid_walk(g: Graph, edges: Sequence[int]) -> bool:
    """True iff consecutive edges are head-to-tail consistent in ``g``."""
    if not edges:
        return False
    m = g.num_edges
    if any(e < 0 or e >= m for e in edges):
        return False
    heads = g.heads
    tails = g.tails
    return all(heads[edges[i]] == tails[edges[i + 1]] for i in range(len(edges) - 1))


def parse_edge_list(text: str) -> Graph:
    """Parse a line-oriented edge list: one "tail head" pair per line.

    Blank lines and lines starting with '#' are skipped. Raises
    :class:`ParseError` on a malformed line (with its 1-based number) or on
    an empty edge set.
    """
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected 'tail head', got {len(tokens)} token(s)"
            )
        edges.append((tokens[0], tokens[1]))
    if not edges:
        raise ParseError("graph must have at least one edge")
    return Graph(edges)


@dataclass(frozen=True)
class NormalizationMap:
    """Provenance of a normalization pass.

    ``origin[e]`` is the original edge id behind normalized edge ``e``;
    ``half[e]`` is 0 for an untouched edge or the first half of a subdivided
    one, 1 for the second half.
    """

    origin: tuple[int, ...]
    half: tuple[int, ...]
    subdivision_nodes: frozenset[str]
    self_loops: int
    parallel_duplicates: int

    @property
    def is_identity(self) -> bool:
        return not self.subdivision_nodes

    def project(self, edges: Sequence[int], circular: bool = False) -> tuple[int, ...]:
        """Map a walk over the normalized graph back to original edge ids.

        The two halves of a subdivided edge always travel together inside a
        walk and collapse to one occurrence of the original id. For circuits
        (``circular=True``) a pair split across the wrap point also collapses.
        """
        origin = self.origin
        half = self.half
        out: list[int] = []
        for e in edges:
            if half[e] == 1 and out and out[-1] == origin[e]:
                continue
            out.append(origin[e])
        if circular and len(out) > 1 and half[edges[0]] == 1 and out[-1] == out[0]:
            out.pop()
        return tuple(out)


def _fresh_label(base_index: dict[str, int], taken: set[str], counter: int) -> tuple[str, int]:
    while True:
        label = f"s{counter}"
        counter += 1
        if label not in base_index and label not in taken:
            return label, counter


def normalize(g: Graph) -> tuple[Graph, NormalizationMap]:
    """Rewrite self-loops and parallel duplicates into length-two paths.

    Within a group of parallel edges the lowest edge id is kept intact and
    the rest are subdivided through fresh nodes; every self-loop is
    subdivided. The result satisfies the simple-graph invariant. If the
    input is already simple, the same Graph object is returned with an
    identity map.
    """
    m = g.num_edges
    n = g.num_nodes
    rewrite = [False] * m
    self_loops = 0
    duplicates = 0
    seen: set[int] = set()
    for e in range(m):
        t = g.tails[e]
        h = g.heads[e]
        if t == h:
            rewrite[e] = True
            self_loops += 1
        else:
            key = t * n + h
            if key in seen:
                rewrite[e] = True
                duplicates += 1
            else:
                seen.add(key)
    if self_loops == 0 and duplicates == 0:
        g._simple = True
        identity = NormalizationMap(
            origin=tuple(range(m)),
            half=(0,) * m,
            subdivision_nodes=frozenset(),
            self_loops=0,
            parallel_duplicates=0,
        )
        return g, identity

    edges: list[tuple[str, str]] = []
    origin: list[int] = []
    half: list[int] = []
    subs: list[str] = []
    taken: set[str] = set()
    counter = 0
    for e in range(m):
        tail, head = g.edge(e)
        if rewrite[e]:
            label, counter = _fresh_label(g.index, taken, counter)
            taken.add(label)
            subs.append(label)
            edges.append((tail, label))
            origin.append(e)
            half.append(0)
            edges.append((label, head))
            origin.append(e)
            half.append(1)
        else:
            edges.append((tail, head))
            origin.append(e)
            half.append(0)
    mapping = NormalizationMap(
        origin=tuple(origin),
        half=tuple(half),
        subdivision_nodes=frozenset(subs),
        self_loops=self_loops,
        parallel_duplicates=duplicates,
    )
    result = Graph(edges)
    result._simple = True  # guaranteed by construction
    return result, mapping


@dataclass(frozen=True)
class EulerCheck:
    """Verdict of the Eulerian-ness test, with a witness on failure."""

    ok: bool
    reason: Optional[str] = None
    witness: Optional[str] = None
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_eulerian(g: Graph) -> EulerCheck:
    """Check balanced degrees and weak connectivity.

    Returns ``ok=True`` iff every node has in-degree equal to out-degree and
    all edges lie in one weakly connected component. On failure the first
    violated condition is named together with a witness node.
    """
    out_adj = g.out_adj
    in_adj = g.in_adj
    for v in range(g.num_nodes):
        if len(out_adj[v]) != len(in_adj[v]):
            label = g.labels[v]
            return EulerCheck(
                False,
                reason="unbalanced",
                witness=label,
                detail=(
                    f"node '{label}' has out-degree {len(out_adj[v])} "
                    f"and in-degree {len(in_adj[v])}"
                ),
            )
    # Weak connectivity: every node is an edge endpoint, so reaching all
    # nodes from node 0 over undirected adjacency is equivalent.
    n = g.num_nodes
    tails = g.tails
    heads = g.heads
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        v = stack.pop()
        for e in out_adj[v]:
            w = heads[e]
            if not seen[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
        for e in in_adj[v]:
            w = tails[e]
            if not seen[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
    if reached != n:
        witness = next(g.labels[v] for v in range(n) if not seen[v])
        return EulerCheck(
            False,
            reason="not-weakly-connected",
            witness=witness,
            detail=f"node '{witness}' is not reachable from '{g.labels[0]}' ignoring directions",
        )
    return EulerCheck(True)


def require_eulerian(g: Graph) -> None:
    """Raise :class:`ContractError` naming the failed condition if not Eulerian."""
    check = is_eulerian(g)
    if not check.ok:
        raise ContractError(f"graph is not Eulerian: {check.detail}")


def require_simple(g: Graph) -> None:
    """Raise :class:`ContractError` if the graph has loops or parallel edges."""
    if not g.is_simple():
        raise ContractError("graph must be normalized (no self-loops or parallel edges)")
