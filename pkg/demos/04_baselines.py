"""
Classical baselines and the exact oracle
========================================

Max-degree greedy, the random-matching factor-2 approximation, and a
branch-and-bound exact solver. The exact answer anchors every quality
claim on instances small enough to verify.
"""
import numpy as np

from lacover import (
    RunConfig,
    exact_min_cover,
    greedy_max_degree,
    parse_dimacs_file,
    solve,
    two_approx_random_matching,
)
from pathlib import Path

here = Path(__file__).resolve().parent.parent / "instances"

for name in ("petersen.col", "grotzsch.col", "queen5_5.col"):
    g = parse_dimacs_file(here / name)
    exact = exact_min_cover(g)
    greedy = greedy_max_degree(g)
    approx = two_approx_random_matching(g, np.random.default_rng(0))
    la = solve(g, RunConfig(seed=0))
    print(f"{name:14s} n={g.n:3d} m={len(g.edges):4d}  "
          f"exact={len(exact):3d}  greedy={len(greedy):3d}  "
          f"2-approx={len(approx):3d}  automata={la.best_size:3d}")

# the factor-2 guarantee is worst-case tight: a single edge forces ratio 2
from lacover import build_graph

k2 = build_graph(2, [(0, 1)])
print()
print("single edge: optimum 1, matching heuristic returns",
      len(two_approx_random_matching(k2, np.random.default_rng(0))))

# branch and bound refuses instances it cannot settle quickly
big = build_graph(40, [(i, (i + 1) % 40) for i in range(40)])
try:
    exact_min_cover(big)
except ValueError as exc:
    print("oversized instance:", exc)
