"""Multi-seed benchmark harness producing summary rows and entropy traces.

Rows mirror the usual covering-number table (best/mean cover size, mean
first-attainment iteration, success rate, wall time); traces are plot-ready
per-iteration sequences of best cover size and mean entropy. Every reported
cover is re-verified before aggregation; the harness never reports a number
whose cover failed verification.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from .baselines import (
    exact_min_cover,
    greedy_max_degree,
    two_approx_random_matching,
)
from .dimacs import DimacsParseError, parse_dimacs_file
from .graph import Graph, is_vertex_cover
from .solver import AlgorithmKind, RunConfig, RunResult, solve

ALGORITHM_LABELS = ("dla", "binary", "greedy", "two-approx", "exact")

CSV_HEADER = "instance,n,algorithm,Cn_best,Cn_mean,Lp_mean,success_rate,wall_time_s"
TRACE_HEADER = "instance,seed,iteration,best_cover_size,mean_entropy"


@dataclass(frozen=True)
class BenchmarkRow:
    instance: str
    n: int
    algorithm: str
    cn_best: float
    cn_mean: float
    lp_mean: float
    success_rate: float
    wall_time_s: float


@dataclass(frozen=True)
class EntropyTrace:
    instance: str
    seed: int
    # (iteration, best cover size, mean entropy) per iteration
    points: tuple[tuple[int, int, float], ...]


@dataclass(frozen=True)
class InstanceError:
    instance: str
    message: str


def bench_default_config() -> RunConfig:
    """Benchmark defaults: entropy stopping disabled so every seed runs
    the full iteration budget and batches are directly comparable."""
    return RunConfig(entropy_threshold=0.0)


def _run_one(
    g: Graph, algorithm: str, config: RunConfig, seed: int
) -> tuple[set[int], int, RunResult | None]:
    """Returns (cover, first-attainment iteration, solver result or None)."""
    if algorithm == "dla":
        result = solve(g, replace(config, seed=seed, algorithm=AlgorithmKind.DLA_WALK))
        return set(result.best_cover), result.best_iteration, result
    if algorithm == "binary":
        result = solve(
            g, replace(config, seed=seed, algorithm=AlgorithmKind.BINARY_ACTION)
        )
        return set(result.best_cover), result.best_iteration, result
    if algorithm == "greedy":
        return greedy_max_degree(g), 0, None
    if algorithm == "two-approx":
        rng = np.random.default_rng(seed)
        return two_approx_random_matching(g, rng), 0, None
    if algorithm == "exact":
        return exact_min_cover(g), 0, None
    raise ValueError(
        f"unknown algorithm {algorithm!r}; expected one of {ALGORITHM_LABELS}"
    )


def run_benchmark(
    instances: Sequence[str | Path],
    config: RunConfig,
    seeds: int = 10,
    algorithm: str | None = None,
) -> tuple[list[BenchmarkRow], list[EntropyTrace], list[InstanceError]]:
    """Run `algorithm` on every instance with seeds config.seed .. +seeds-1.

    A file that fails to parse produces an InstanceError and the batch
    continues. Rows and traces come back in instance order; traces are
    emitted for the learning-automata algorithms only.
    """
    if seeds < 1:
        raise ValueError("seeds must be >= 1")
    label = algorithm if algorithm is not None else config.algorithm.value
    rows: list[BenchmarkRow] = []
    traces: list[EntropyTrace] = []
    errors: list[InstanceError] = []
    for path in instances:
        name = Path(path).stem
        try:
            g = parse_dimacs_file(path)
        except (DimacsParseError, OSError) as exc:
            errors.append(InstanceError(instance=name, message=str(exc)))
            continue
        sizes: list[int] = []
        lps: list[int] = []
        times: list[float] = []
        valid_count = 0
        for seed in range(config.seed, config.seed + seeds):
            started = time.perf_counter()
            cover, lp, result = _run_one(g, label, config, seed)
            times.append(time.perf_counter() - started)
            if is_vertex_cover(g, cover):
                valid_count += 1
                sizes.append(len(cover))
                lps.append(lp)
            if result is not None:
                traces.append(
                    EntropyTrace(
                        instance=name,
                        seed=seed,
                        points=tuple(
                            (r.iteration, r.best_size, r.mean_entropy)
                            for r in result.records
                        ),
                    )
                )
        if sizes:
            cn_best = float(min(sizes))
            cn_mean = float(np.mean(sizes))
            lp_mean = float(np.mean(lps))
        else:
            cn_best = cn_mean = lp_mean = float("nan")
        rows.append(
            BenchmarkRow(
                instance=name,
                n=g.n,
                algorithm=label,
                cn_best=cn_best,
                cn_mean=cn_mean,
                lp_mean=lp_mean,
                success_rate=valid_count / seeds,
                wall_time_s=float(np.mean(times)),
            )
        )
    return rows, traces, errors


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def write_csv(rows: Sequence[BenchmarkRow]) -> str:
    """Summary rows as CSV text; deterministic apart from wall_time_s."""
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                (
                    row.instance,
                    str(row.n),
                    row.algorithm,
                    _fmt(row.cn_best),
                    _fmt(row.cn_mean),
                    _fmt(row.lp_mean),
                    _fmt(row.success_rate),
                    _fmt(row.wall_time_s),
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_trace(traces: Sequence[EntropyTrace]) -> str:
    """Entropy traces as CSV text, one line per iteration."""
    lines = [TRACE_HEADER]
    for trace in traces:
        for iteration, best_size, entropy in trace.points:
            lines.append(
                f"{trace.instance},{trace.seed},{iteration},"
                f"{best_size},{_fmt(entropy)}"
            )
    return "\n".join(lines) + "\n"
