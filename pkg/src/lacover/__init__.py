"""Minimum vertex cover via networks of learning automata.

The package bundles the automata-based solver (a random-walk variant and a
two-action variant), classical baselines (max-degree greedy, random-matching
factor-2, exact branch and bound), a DIMACS edge-format reader/writer, and a
multi-seed benchmark harness.
"""
from .automaton import (
    Automaton,
    ReinforcementScheme,
    SchemeKind,
    new_uniform,
    reward_epsilon_penalty,
    reward_inaction,
    reward_penalty,
)
from .baselines import (
    exact_min_cover,
    greedy_max_degree,
    two_approx_random_matching,
)
from .bench import (
    BenchmarkRow,
    EntropyTrace,
    InstanceError,
    bench_default_config,
    run_benchmark,
    write_csv,
    write_trace,
)
from .dimacs import (
    DimacsParseError,
    DuplicateEdgeWarning,
    parse_dimacs,
    parse_dimacs_file,
    write_dimacs,
)
from .graph import Graph, build_graph, is_vertex_cover, uncovered_edges
from .solver import (
    AlgorithmKind,
    DlaNetwork,
    IterationRecord,
    RunConfig,
    RunResult,
    StopReason,
    build_network,
    complete_cover,
    construct_candidate,
    mean_cover_entropy,
    should_stop,
    solve,
    solve_binary,
    strip_redundant,
    update_network,
)

__version__ = "0.1.0"

__all__ = [
    "AlgorithmKind",
    "Automaton",
    "BenchmarkRow",
    "DimacsParseError",
    "DlaNetwork",
    "DuplicateEdgeWarning",
    "EntropyTrace",
    "Graph",
    "InstanceError",
    "IterationRecord",
    "ReinforcementScheme",
    "RunConfig",
    "RunResult",
    "SchemeKind",
    "StopReason",
    "bench_default_config",
    "build_graph",
    "build_network",
    "complete_cover",
    "construct_candidate",
    "exact_min_cover",
    "greedy_max_degree",
    "is_vertex_cover",
    "mean_cover_entropy",
    "new_uniform",
    "parse_dimacs",
    "parse_dimacs_file",
    "reward_epsilon_penalty",
    "reward_inaction",
    "reward_penalty",
    "run_benchmark",
    "should_stop",
    "solve",
    "solve_binary",
    "strip_redundant",
    "two_approx_random_matching",
    "uncovered_edges",
    "update_network",
    "write_csv",
    "write_dimacs",
    "write_trace",
]
