"""Underlying undirected graph, cut nodes, and component splits."""
from __future__ import annotations

from array import array
from dataclasses import dataclass

from .graph import ContractError, Graph


class UGraph:
    """Undirected view of a directed graph, in CSR form.

    One undirected edge per directed edge, keeping the directed edge id;
    antiparallel directed pairs therefore become parallel undirected edges
    and are retained as such. Node ids and labels are shared with the source
    graph.
    """

    __slots__ = ("labels", "index", "num_edges", "off", "nbr", "eid")

    def __init__(self, labels, index, off, nbr, eid):
        self.labels = labels
        self.index = index
        self.off = off
        self.nbr = nbr
        self.eid = eid
        self.num_edges = len(nbr) // 2

    @property
    def num_nodes(self) -> int:
        return len(self.labels)

    def neighbors(self, label: str):
        """(neighbor label, edge id) pairs incident to ``label``."""
        v = self.index[label]
        for i in range(self.off[v], self.off[v + 1]):
            yield self.labels[self.nbr[i]], self.eid[i]


def underlying_undirected(g: Graph) -> UGraph:
    """Drop edge orientations, keeping multiplicity and edge ids."""
    n = g.num_nodes
    m = g.num_edges
    tails = g.tails
    heads = g.heads
    off = [0] * (n + 1)
    for v in range(n):
        off[v + 1] = off[v] + len(g.out_adj[v]) + len(g.in_adj[v])
    nbr = array("i", bytes(8 * m))
    eid = array("i", bytes(8 * m))
    pos = off[:-1].copy()
    for e in range(m):
        t = tails[e]
        h = heads[e]
        p = pos[t]
        nbr[p] = h
        eid[p] = e
        pos[t] = p + 1
        p = pos[h]
        nbr[p] = t
        eid[p] = e
        pos[h] = p + 1
    return UGraph(g.labels, g.index, off, nbr, eid)


def articulation_flags(u: UGraph) -> list[bool]:
    """Per-node-id cut flags via one iterative lowlink DFS.

    Only the specific edge used to enter a node is skipped when updating
    lowlinks, so a parallel copy of the tree edge acts as a back edge and a
    doubled edge never makes its endpoints look like a cut. Raises
    :class:`ContractError` on disconnected input.
    """
    n = u.num_nodes
    off = u.off
    nbr = u.nbr
    eid = u.eid
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    via = [-1] * n  # edge id used to first reach each node
    cursor = off[:-1].copy()
    flags = [False] * n
    disc[0] = low[0] = 0
    timer = 1
    root_children = 0
    stack = [0]
    while stack:
        v = stack[-1]
        i = cursor[v]
        if i < off[v + 1]:
            cursor[v] = i + 1
            w = nbr[i]
            e = eid[i]
            dw = disc[w]
            if dw == -1:
                parent[w] = v
                via[w] = e
                disc[w] = low[w] = timer
                timer += 1
                stack.append(w)
            elif e != via[v] and dw < low[v]:
                low[v] = dw
        else:
            stack.pop()
            p = parent[v]
            if p != -1:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == 0:
                    root_children += 1
                elif low[v] >= disc[p]:
                    flags[p] = True
    if timer != n:
        raise ContractError("undirected graph is not connected")
    if root_children > 1:
        flags[0] = True
    return flags


def articulation_points(u: UGraph) -> set[str]:
    """Labels of exactly the nodes whose removal disconnects ``u``."""
    flags = articulation_flags(u)
    return {u.labels[v] for v in range(u.num_nodes) if flags[v]}


@dataclass(frozen=True)
class ComponentSplit:
    """Connected components of the graph with one node removed."""

    removed: str
    component: dict[str, int]  # remaining node label -> component id
    count: int


def component_split(u: UGraph, v: str) -> ComponentSplit:
    """Label every node of ``u`` minus ``v`` by its connected component."""
    root = u.index.get(v)
    if root is None:
        raise ContractError(f"node '{v}' is not in the graph")
    n = u.num_nodes
    off = u.off
    nbr = u.nbr
    comp = [-1] * n
    comp[root] = -2
    count = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        comp[s] = count
        stack = [s]
        while stack:
            x = stack.pop()
            for i in range(off[x], off[x + 1]):
                w = nbr[i]
                if comp[w] == -1:
                    comp[w] = count
                    stack.append(w)
        count += 1
    labels = u.labels
    mapping = {labels[x]: comp[x] for x in range(n) if x != root}
    return ComponentSplit(removed=v, component=mapping, count=count)
