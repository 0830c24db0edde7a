"""Random Eulerian multigraph generation by cycle superposition."""
from __future__ import annotations

import random
from typing import Optional, Union

from .graph import GraphError


def random_eulerian_edges(
    num_nodes: int,
    num_cycles: int,
    seed: Union[int, random.Random, None] = None,
    max_attempts: int = 1000,
) -> list[tuple[str, str]]:
    """Superpose random simple directed cycles over ``num_nodes`` nodes.

    Each cycle is a uniformly drawn subset of size >= 2, permuted
    cyclically, so the union is balanced at every node and Eulerian once
    weakly connected; draws are repeated until the used nodes form one weak
    component (at most ``max_attempts`` times). Deterministic for a fixed
    seed. Nodes are labeled v0..v{n-1}; only nodes on some cycle appear.
    """
    if num_nodes < 2:
        raise GraphError("need at least 2 nodes to draw a simple cycle")
    if num_cycles < 1:
        raise GraphError("need at least one cycle")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(max_attempts):
        edges: list[tuple[int, int]] = []
        for _ in range(num_cycles):
            k = rng.randint(2, num_nodes)
            nodes = rng.sample(range(num_nodes), k)
            for i in range(k):
                edges.append((nodes[i], nodes[(i + 1) % k]))
        if _weakly_connected(edges):
            return [(f"v{t}", f"v{h}") for t, h in edges]
    raise GraphError(
        f"could not draw a weakly connected graph in {max_attempts} attempts"
    )


def _weakly_connected(edges: list[tuple[int, int]]) -> bool:
    adjacency: dict[int, list[int]] = {}
    for t, h in edges:
        adjacency.setdefault(t, []).append(h)
        adjacency.setdefault(h, []).append(t)
    start = edges[0][0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adjacency)


def edge_list_text(edges: list[tuple[str, str]]) -> str:
    """Serialize edges in the package's line-oriented input format."""
    return "".join(f"{t} {h}\n" for t, h in edges)
