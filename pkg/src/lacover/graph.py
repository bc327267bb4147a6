"""Undirected graph container and vertex-cover predicates.

Vertices are dense 0-based ids. Edges are unordered pairs stored once each
and addressed by an integer edge id assigned in first-seen order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph.

    adjacency[v] holds (neighbor, edge_id) pairs; degree(v) is its length.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def non_isolated(self) -> list[int]:
        """Vertices with degree >= 1, ascending."""
        return [v for v in range(self.n) if self.adjacency[v]]


def build_graph(n: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Construct a Graph from unordered vertex pairs.

    Duplicate pairs (in either orientation) collapse to a single edge.
    Self-loops and out-of-range endpoints are rejected.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    seen: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    for u, v in edge_pairs:
        if u == v:
            raise ValueError(f"self-loop ({u},{v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen[key] = len(edges)
            edges.append(key)
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        adjacency[u].append((v, eid))
        adjacency[v].append((u, eid))
    return Graph(
        n=n,
        edges=tuple(edges),
        adjacency=tuple(tuple(a) for a in adjacency),
    )


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    """True iff every edge has at least one endpoint in cover."""
    members = set(cover)
    return all(u in members or v in members for u, v in g.edges)


def uncovered_edges(g: Graph, cover: Iterable[int]) -> list[int]:
    """Edge ids with neither endpoint in cover, ascending."""
    members = set(cover)
    return [
        eid
        for eid, (u, v) in enumerate(g.edges)
        if u not in members and v not in members
    ]
