from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from lacover import Graph, build_graph

INSTANCE_DIR = Path(__file__).resolve().parent.parent / "instances"


def gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi random graph, each pair kept independently."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def triangle() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture(scope="session")
def er_suite() -> list[Graph]:
    """200 small random graphs with mixed densities; shared across tests
    that compare against exhaustive enumeration."""
    rng = np.random.default_rng(12345)
    suite = []
    for i in range(200):
        n = int(rng.integers(4, 13))
        p = (0.2, 0.5, 0.8)[i % 3]
        suite.append(gnp(n, p, rng))
    return suite


@pytest.fixture(scope="session")
def er_optima(er_suite: list[Graph]) -> list[int]:
    from oracle import min_cover_size

    return [min_cover_size(g.n, list(g.edges)) for g in er_suite]
