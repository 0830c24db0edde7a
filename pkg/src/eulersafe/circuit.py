"""Eulerian circuit construction (Hierholzer) and circuit surgery."""
from __future__ import annotations

import random
from typing import Optional, Sequence

from .graph import Circuit, ContractError, Graph, is_eulerian


def find_eulerian_circuit(
    g: Graph,
    rng: Optional[random.Random] = None,
    stats: Optional[dict] = None,
) -> Circuit:
    """Build an Eulerian circuit in O(|E|) time.

    Out-edges are consumed in ascending edge-id order, so the result is
    deterministic; passing ``rng`` shuffles the per-node consumption order
    instead (used to check that downstream results do not depend on the
    particular circuit). The circuit is rotated to start with edge id 0.

    Raises :class:`ContractError` naming the failed Euler condition when the
    graph is not Eulerian.
    """
    check = is_eulerian(g)
    if not check.ok:
        raise ContractError(f"cannot build Eulerian circuit: {check.detail}")
    return _hierholzer(g, rng=rng, stats=stats)


def _hierholzer(
    g: Graph,
    rng: Optional[random.Random] = None,
    stats: Optional[dict] = None,
) -> Circuit:
    """Hierholzer core; assumes the graph is already known to be Eulerian."""
    heads = g.heads
    if rng is None:
        out_adj = g.out_adj
    else:
        out_adj = [list(edges) for edges in g.out_adj]
        for edges in out_adj:
            rng.shuffle(edges)
    m = g.num_edges
    degree = [len(edges) for edges in out_adj]
    cursor = [0] * g.num_nodes
    # Parallel stacks (node, edge used to enter it). When a node has no
    # unused out-edge left, its entry edge is emitted; reversing at the end
    # yields the circuit with sub-tours spliced in place.
    node_stack = [g.tails[0]]
    edge_stack = [-1]
    pushes = 1
    circuit: list[int] = []
    emit = circuit.append
    while node_stack:
        v = node_stack[-1]
        c = cursor[v]
        if c < degree[v]:
            e = out_adj[v][c]
            cursor[v] = c + 1
            node_stack.append(heads[e])
            edge_stack.append(e)
            pushes += 1
        else:
            node_stack.pop()
            e = edge_stack.pop()
            if e >= 0:
                emit(e)
    if stats is not None:
        stats["stack_pushes"] = pushes
    if len(circuit) != m:
        raise ContractError("graph is not Eulerian: some edges are unreachable")
    circuit.reverse()
    i = circuit.index(0)
    if i:
        circuit = circuit[i:] + circuit[:i]
    return Circuit(tuple(circuit))


def verify_circuit(g: Graph, c: Circuit) -> bool:
    """True iff ``c`` is head-to-tail consistent, closed, and uses every
    edge id of ``g`` exactly once."""
    edges = c.edges
    m = g.num_edges
    if len(edges) != m:
        return False
    seen = bytearray(m)
    for e in edges:
        if e < 0 or e >= m or seen[e]:
            return False
        seen[e] = 1
    tails = g.tails
    heads = g.heads
    for i in range(len(edges) - 1):
        if heads[edges[i]] != tails[edges[i + 1]]:
            return False
    return heads[edges[-1]] == tails[edges[0]]


def canonical_rotation(edges: Sequence[int]) -> tuple[int, ...]:
    """Rotate a circuit's edge sequence to start at its smallest edge id."""
    edges = tuple(edges)
    i = edges.index(min(edges))
    return edges[i:] + edges[:i]


def _cyclic_slice(seq: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    if i <= j:
        return tuple(seq[i:j])
    return tuple(seq[i:]) + tuple(seq[:j])


def swap_at_node(g: Graph, c: Circuit, v: str, occ: int) -> Circuit:
    """Exchange the two sub-circuits around an occurrence of ``v``.

    ``occ`` selects (0-based, in circuit order) the middle of three
    consecutive occurrences of ``v``; the sub-circuit leading into that
    occurrence and the one leaving it are swapped. The result is a valid
    circuit over the same edge multiset whose edge pair meeting at the
    selected occurrence differs from the input's. Requires ``v`` to occur at
    least three times.
    """
    node = g.index.get(v)
    if node is None:
        raise ContractError(f"node '{v}' is not in the graph")
    tails = g.tails
    edges = c.edges
    k = len(edges)
    occurrences = [i for i in range(k) if tails[edges[i]] == node]
    count = len(occurrences)
    if count < 3:
        raise ContractError(
            f"node '{v}' occurs {count} time(s) in the circuit; need at least 3"
        )
    if not 0 <= occ < count:
        raise ContractError(f"occurrence index {occ} out of range [0, {count})")
    prev = occurrences[(occ - 1) % count]
    mid = occurrences[occ]
    nxt = occurrences[(occ + 1) % count]
    before = _cyclic_slice(edges, prev, mid)
    after = _cyclic_slice(edges, mid, nxt)
    rest = _cyclic_slice(edges, nxt, prev)
    swapped = after + before + rest
    # Re-anchor on the input's first edge so repeated swaps are comparable.
    i = swapped.index(edges[0])
    if i:
        swapped = swapped[i:] + swapped[:i]
    return Circuit(swapped)
