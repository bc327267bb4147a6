"""Classical vertex-cover algorithms: greedy, factor-2, and an exact oracle.

The exact solver is branch and bound with a maximal-matching lower bound,
intended for small instances; it anchors the correctness claims of the
stochastic solvers.
"""
from __future__ import annotations

import numpy as np

from .graph import Graph


def greedy_max_degree(g: Graph) -> set[int]:
    """Repeatedly take a maximum-residual-degree vertex (ties: lowest id)
    and delete its incident edges until none remain."""
    degrees = np.array([g.degree(v) for v in range(g.n)], dtype=np.int64)
    alive = np.ones(len(g.edges), dtype=bool)
    cover: set[int] = set()
    while degrees.size and degrees.max() > 0:
        v = int(np.argmax(degrees))
        cover.add(v)
        for u, eid in g.adjacency[v]:
            if alive[eid]:
                alive[eid] = False
                degrees[u] -= 1
        degrees[v] = 0
    return cover


def two_approx_random_matching(g: Graph, rng: np.random.Generator) -> set[int]:
    """Pick uncovered edges uniformly at random, adding both endpoints.

    The selected edges form a matching, so the result is at most twice the
    optimum; its size is exactly 2 x the number of selections.
    """
    alive = list(range(len(g.edges)))
    cover: set[int] = set()
    while alive:
        eid = alive[int(rng.integers(len(alive)))]
        u, v = g.edges[eid]
        cover.add(u)
        cover.add(v)
        alive = [
            e for e in alive if u not in g.edges[e] and v not in g.edges[e]
        ]
    return cover


def _maximal_matching_size(adjacency: dict[int, set[int]]) -> int:
    taken: set[int] = set()
    size = 0
    for v in sorted(adjacency):
        if v in taken:
            continue
        for u in adjacency[v]:
            if u not in taken:
                taken.add(v)
                taken.add(u)
                size += 1
                break
    return size


def exact_min_cover(g: Graph, size_limit: int = 25) -> set[int]:
    """Minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex (it joins the cover, or all its
    neighbors do) and prunes with the incumbent plus a maximal-matching
    lower bound. Refuses instances with more than size_limit non-isolated
    vertices.
    """
    active = [v for v in range(g.n) if g.adjacency[v]]
    if len(active) > size_limit:
        raise ValueError(
            f"instance has {len(active)} non-isolated vertices, "
            f"exceeding the size limit of {size_limit}"
        )
    adjacency = {v: {u for u, _ in g.adjacency[v]} for v in active}
    # the full non-isolated set is always a cover, so a best exists
    best: set[int] = set(active)

    def remove_vertices(
        adj: dict[int, set[int]], drop: set[int]
    ) -> dict[int, set[int]]:
        out = {}
        for v, nbrs in adj.items():
            if v in drop:
                continue
            remaining = nbrs - drop
            if remaining:
                out[v] = remaining
        return out

    def search(adj: dict[int, set[int]], chosen: set[int]) -> None:
        nonlocal best
        if not adj:
            if len(chosen) < len(best):
                best = set(chosen)
            return
        if len(chosen) + _maximal_matching_size(adj) >= len(best):
            return
        v = min(adj, key=lambda x: (-len(adj[x]), x))
        neighbors = set(adj[v])
        search(remove_vertices(adj, {v}), chosen | {v})
        search(remove_vertices(adj, neighbors | {v}), chosen | neighbors)

    search(adjacency, set())
    return best
