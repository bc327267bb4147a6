"""Command-line front end: solve one instance or benchmark a batch.

The LACOVER_OUTPUT_DIR environment variable, when set, is the default
directory for relative benchmark output paths.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .baselines import (
    exact_min_cover,
    greedy_max_degree,
    two_approx_random_matching,
)
from .bench import ALGORITHM_LABELS, run_benchmark, write_csv, write_trace
from .dimacs import DimacsParseError, parse_dimacs_file
from .automaton import (
    reward_epsilon_penalty,
    reward_inaction,
    reward_penalty,
)
from .solver import AlgorithmKind, RunConfig, solve

INSTANCE_SUFFIXES = (".col", ".clq", ".dimacs")


class CliError(Exception):
    pass


def _add_solver_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--algorithm",
        choices=ALGORITHM_LABELS,
        default="dla",
        help="solver or baseline to run (default: dla)",
    )
    sub.add_argument("--seed", type=int, default=0, help="base random seed")
    sub.add_argument(
        "--learning-rate",
        type=float,
        default=0.3,
        metavar="A",
        help="reward rate a (default: 0.3)",
    )
    sub.add_argument(
        "--penalty-rate",
        type=float,
        default=None,
        metavar="B",
        help="penalty rate b (lrep: required; lrp: defaults to A)",
    )
    sub.add_argument(
        "--scheme",
        choices=("lri", "lrp", "lrep"),
        default="lri",
        help="reinforcement scheme (default: lri, penalties ignored)",
    )
    sub.add_argument("--max-iterations", type=int, default=1000)
    sub.add_argument(
        "--entropy-threshold",
        type=float,
        default=None,
        help="stop when mean best-cover entropy drops below this "
        "(solve default: 0.05; bench default: 0 = disabled)",
    )
    sub.add_argument(
        "--cover-threshold",
        type=int,
        default=None,
        help="abort a walk whose candidate reaches this size (default: n)",
    )


def _build_scheme(args: argparse.Namespace):
    a = args.learning_rate
    b = args.penalty_rate
    try:
        if args.scheme == "lri":
            if b not in (None, 0.0):
                raise CliError("--scheme lri ignores penalties; omit --penalty-rate")
            return reward_inaction(a)
        if args.scheme == "lrp":
            if b is not None and b != a:
                raise CliError("--scheme lrp requires --penalty-rate equal to A")
            return reward_penalty(a)
        if b is None:
            raise CliError("--scheme lrep requires --penalty-rate")
        return reward_epsilon_penalty(a, b)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _build_config(args: argparse.Namespace, bench: bool) -> RunConfig:
    if args.entropy_threshold is None:
        entropy_threshold = 0.0 if bench else 0.05
    else:
        entropy_threshold = args.entropy_threshold
    algorithm = (
        AlgorithmKind.BINARY_ACTION
        if args.algorithm == "binary"
        else AlgorithmKind.DLA_WALK
    )
    try:
        return RunConfig(
            scheme=_build_scheme(args),
            max_iterations=args.max_iterations,
            entropy_threshold=entropy_threshold,
            cover_threshold=args.cover_threshold,
            seed=args.seed,
            algorithm=algorithm,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _cmd_solve(args: argparse.Namespace) -> int:
    config = _build_config(args, bench=False)
    g = parse_dimacs_file(args.file)
    name = Path(args.file).stem
    print(f"instance: {name}")
    print(f"vertices: {g.n}  edges: {len(g.edges)}")
    print(f"algorithm: {args.algorithm}")
    if args.algorithm in ("dla", "binary"):
        result = solve(g, config)
        cover = sorted(result.best_cover)
        print(f"cover size: {result.best_size}")
        print("cover (1-based):", " ".join(str(v + 1) for v in cover))
        print(
            f"stop: {result.stop_reason.value} after {len(result.records)} "
            f"iterations (best first attained at iteration "
            f"{result.best_iteration})"
        )
    else:
        if args.algorithm == "greedy":
            cover_set = greedy_max_degree(g)
        elif args.algorithm == "two-approx":
            cover_set = two_approx_random_matching(
                g, np.random.default_rng(config.seed)
            )
        else:
            cover_set = exact_min_cover(g)
        cover = sorted(cover_set)
        print(f"cover size: {len(cover)}")
        print("cover (1-based):", " ".join(str(v + 1) for v in cover))
    return 0


def _expand_instances(paths: Sequence[str]) -> list[Path]:
    out: list[Path] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            found = sorted(
                child
                for child in p.iterdir()
                if child.suffix in INSTANCE_SUFFIXES and child.is_file()
            )
            if not found:
                raise CliError(f"no instance files found in directory {p}")
            out.extend(found)
        else:
            out.append(p)
    return out


def _output_path(raw: str) -> Path:
    p = Path(raw)
    base = os.environ.get("LACOVER_OUTPUT_DIR")
    if base and not p.is_absolute():
        return Path(base) / p
    return p


def _cmd_bench(args: argparse.Namespace) -> int:
    config = _build_config(args, bench=True)
    instances = _expand_instances(args.paths)
    rows, traces, errors = run_benchmark(
        instances, config, seeds=args.seeds, algorithm=args.algorithm
    )
    out_path = _output_path(args.out)
    trace_path = _output_path(args.trace)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    trace_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(write_csv(rows))
    trace_path.write_text(write_trace(traces))
    print(f"wrote {len(rows)} rows to {out_path}")
    print(f"wrote {len(traces)} traces to {trace_path}")
    for err in errors:
        print(f"error: {err.instance}: {err.message}", file=sys.stderr)
    return 1 if errors else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lacover",
        description="Minimum vertex cover via learning automata, "
        "with classical baselines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a single DIMACS instance")
    p_solve.add_argument("file", help="DIMACS edge-format file")
    _add_solver_flags(p_solve)
    p_solve.set_defaults(handler=_cmd_solve)

    p_bench = sub.add_parser(
        "bench", help="benchmark instances over multiple seeds"
    )
    p_bench.add_argument(
        "paths", nargs="+", help="DIMACS files or directories of them"
    )
    _add_solver_flags(p_bench)
    p_bench.add_argument(
        "--seeds", type=int, default=10, help="seeds per instance (default: 10)"
    )
    p_bench.add_argument(
        "--out", default="rows.csv", help="summary CSV path (default: rows.csv)"
    )
    p_bench.add_argument(
        "--trace",
        default="traces.csv",
        help="entropy trace CSV path (default: traces.csv)",
    )
    p_bench.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (CliError, DimacsParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
