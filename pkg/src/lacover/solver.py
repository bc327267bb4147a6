"""Vertex-cover search driven by a network of learning automata.

Two variants share the same bookkeeping:

* the walk variant assigns each non-isolated vertex an automaton whose
  actions are its incident edges; every iteration a random walk over those
  automata assembles a candidate cover and the walked path is rewarded or
  penalized by comparison against the best cover so far;
* the binary variant gives each non-isolated vertex a two-action automaton
  (in / out of the candidate) sampled independently each iteration.

Candidates are finished before evaluation: a candidate that misses edges is
completed with endpoints of uncovered edges, and redundant members (every
incident edge already covered twice) are stripped. Runs stop when the mean
entropy over the current best cover's automata falls below a threshold, or
at the iteration cap.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

import numpy as np

from .automaton import (
    Automaton,
    ReinforcementScheme,
    new_uniform,
    reward_inaction,
)
from .graph import Graph, uncovered_edges


class AlgorithmKind(enum.Enum):
    DLA_WALK = "dla"
    BINARY_ACTION = "binary"


class StopReason(enum.Enum):
    ENTROPY_CONVERGED = "entropy_converged"
    ITERATION_CAP = "iteration_cap"


@dataclass(frozen=True)
class RunConfig:
    """All solver knobs. cover_threshold=None means the vertex count."""

    scheme: ReinforcementScheme = field(
        default_factory=lambda: reward_inaction(0.3)
    )
    max_iterations: int = 1000
    entropy_threshold: float = 0.05
    cover_threshold: int | None = None
    seed: int = 0
    algorithm: AlgorithmKind = AlgorithmKind.DLA_WALK

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not 0.0 <= self.entropy_threshold <= 1.0:
            raise ValueError("entropy_threshold must be in [0,1]")
        if self.cover_threshold is not None and self.cover_threshold < 1:
            raise ValueError("cover_threshold must be >= 1")


@dataclass
class DlaNetwork:
    """Per-vertex automata over a shared immutable graph.

    The walk variant labels actions with incident edge ids; the binary
    variant uses the fixed pair (0, 1) for in/out.
    """

    graph: Graph
    automata: dict[int, Automaton]


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    candidate_size: int
    candidate_valid: bool
    rewarded: bool
    best_size: int
    mean_entropy: float


@dataclass(frozen=True)
class RunResult:
    best_cover: frozenset[int]
    best_size: int
    best_iteration: int
    records: tuple[IterationRecord, ...]
    stop_reason: StopReason


def build_network(g: Graph, scheme: ReinforcementScheme) -> DlaNetwork:
    """One uniform automaton per vertex of degree >= 1, actions = incident edges."""
    automata = {
        v: new_uniform(tuple(eid for _, eid in g.adjacency[v]), scheme)
        for v in range(g.n)
        if g.adjacency[v]
    }
    return DlaNetwork(graph=g, automata=automata)


def construct_candidate(
    net: DlaNetwork, rng: np.random.Generator, cover_threshold: int
) -> tuple[set[int], list[tuple[int, int]], bool]:
    """Build one candidate cover by walking the automata network.

    Starting from a uniformly random non-isolated vertex, the current
    vertex is added to the candidate, then its automaton picks an incident
    edge among those whose far endpoint is not yet in the candidate and the
    walk moves there. When no admissible action exists the walk jumps to a
    uniformly random endpoint of an uncovered edge without recording an
    action. Returns (candidate, path of genuine (vertex, action) choices,
    validity). The candidate is valid when it covers every edge; hitting
    cover_threshold first marks it invalid.
    """
    g = net.graph
    if not g.edges:
        return set(), [], True
    candidate: set[int] = set()
    path: list[tuple[int, int]] = []
    uncovered = set(range(len(g.edges)))
    non_isolated = [v for v in range(g.n) if g.adjacency[v]]
    current = non_isolated[int(rng.integers(len(non_isolated)))]
    while True:
        candidate.add(current)
        for _, eid in g.adjacency[current]:
            uncovered.discard(eid)
        if not uncovered:
            return candidate, path, True
        if len(candidate) >= cover_threshold:
            return candidate, path, False
        mask = [
            k
            for k, (u, _) in enumerate(g.adjacency[current])
            if u not in candidate
        ]
        action = net.automata[current].select_action(rng, mask)
        if action is None:
            endpoints = sorted(
                {w for eid in uncovered for w in g.edges[eid]}
            )
            current = endpoints[int(rng.integers(len(endpoints)))]
        else:
            path.append((current, action))
            current = g.adjacency[current][action][0]


def update_network(
    net: DlaNetwork,
    path: Sequence[tuple[int, int]],
    candidate_size: int,
    candidate_valid: bool,
    best_size: int,
) -> bool:
    """Reward every path action iff the candidate is valid and no larger
    than the best cover so far (ties reinforce); penalize otherwise."""
    rewarded = candidate_valid and candidate_size <= best_size
    for vertex, action in path:
        if rewarded:
            net.automata[vertex].reward(action)
        else:
            net.automata[vertex].penalize(action)
    return rewarded


def strip_redundant(g: Graph, candidate: Iterable[int]) -> set[int]:
    """Drop members all of whose incident edges are covered twice.

    Removal is one vertex at a time, lowest degree first (ties by lowest
    id), so the result is deterministic and still a valid cover whenever
    the input was.
    """
    members = set(candidate)
    count = {
        eid: (u in members) + (v in members)
        for eid, (u, v) in enumerate(g.edges)
    }
    while True:
        redundant = [
            v
            for v in members
            if all(count[eid] == 2 for _, eid in g.adjacency[v])
        ]
        if not redundant:
            return members
        drop = min(redundant, key=lambda v: (g.degree(v), v))
        members.discard(drop)
        for _, eid in g.adjacency[drop]:
            count[eid] -= 1


def complete_cover(
    g: Graph, candidate: Iterable[int], rng: np.random.Generator
) -> set[int]:
    """Extend a partial candidate to a valid cover by repeatedly adding a
    uniformly random endpoint of a uniformly random uncovered edge."""
    members = set(candidate)
    missing = uncovered_edges(g, members)
    while missing:
        eid = missing[int(rng.integers(len(missing)))]
        pick = g.edges[eid][int(rng.integers(2))]
        members.add(pick)
        missing = [e for e in missing if pick not in g.edges[e]]
    return members


def mean_cover_entropy(
    automata: Mapping[int, Automaton], cover: Iterable[int]
) -> float:
    """Mean normalized entropy over cover members that carry automata."""
    values = [
        automata[v].normalized_entropy() for v in cover if v in automata
    ]
    if not values:
        return 0.0
    return sum(values) / len(values)


def should_stop(
    net: DlaNetwork,
    best_cover: frozenset[int] | None,
    iteration: int,
    config: RunConfig,
) -> StopReason | None:
    """Entropy convergence is checked before the iteration cap."""
    if (
        best_cover is not None
        and mean_cover_entropy(net.automata, best_cover)
        < config.entropy_threshold
    ):
        return StopReason.ENTROPY_CONVERGED
    if iteration >= config.max_iterations:
        return StopReason.ITERATION_CAP
    return None


def solve(g: Graph, config: RunConfig) -> RunResult:
    """Run the configured variant. Deterministic in (graph, config)."""
    if config.algorithm is AlgorithmKind.BINARY_ACTION:
        return solve_binary(g, config)
    return _solve_walk(g, config)


def _solve_walk(g: Graph, config: RunConfig) -> RunResult:
    cover_threshold = (
        config.cover_threshold if config.cover_threshold is not None else g.n
    )
    if g.edges and cover_threshold > g.n:
        raise ValueError(f"cover_threshold {cover_threshold} exceeds n={g.n}")
    rng = np.random.default_rng(config.seed)
    net = build_network(g, config.scheme)
    best = frozenset(v for v in range(g.n) if g.adjacency[v])
    best_size = len(best)
    best_iteration = 0
    records: list[IterationRecord] = []
    stop = StopReason.ITERATION_CAP
    for iteration in range(config.max_iterations):
        candidate, path, valid = construct_candidate(net, rng, cover_threshold)
        if valid:
            candidate = strip_redundant(g, candidate)
        rewarded = update_network(net, path, len(candidate), valid, best_size)
        if valid and len(candidate) < best_size:
            best = frozenset(candidate)
            best_size = len(candidate)
            best_iteration = iteration
        entropy = mean_cover_entropy(net.automata, best)
        records.append(
            IterationRecord(
                iteration, len(candidate), valid, rewarded, best_size, entropy
            )
        )
        reason = should_stop(net, best, iteration + 1, config)
        if reason is not None:
            stop = reason
            break
    return RunResult(best, best_size, best_iteration, tuple(records), stop)


def solve_binary(g: Graph, config: RunConfig) -> RunResult:
    """Independent two-action automata; candidate = vertices choosing in.

    Samples that miss edges are completed to valid covers and every
    candidate is stripped of redundancy before the reward comparison, so
    each iteration evaluates a valid cover.
    """
    if config.algorithm is not AlgorithmKind.BINARY_ACTION:
        config = replace(config, algorithm=AlgorithmKind.BINARY_ACTION)
    rng = np.random.default_rng(config.seed)
    net = DlaNetwork(
        graph=g,
        automata={
            v: new_uniform((0, 1), config.scheme)
            for v in range(g.n)
            if g.adjacency[v]
        },
    )
    best = frozenset(net.automata)
    best_size = len(best)
    best_iteration = 0
    records: list[IterationRecord] = []
    stop = StopReason.ITERATION_CAP
    for iteration in range(config.max_iterations):
        draws = {
            v: aut.select_action(rng) for v, aut in net.automata.items()
        }
        candidate = {v for v, d in draws.items() if d == 0}
        if uncovered_edges(g, candidate):
            candidate = complete_cover(g, candidate, rng)
        candidate = strip_redundant(g, candidate)
        rewarded = len(candidate) <= best_size
        for v, aut in net.automata.items():
            if rewarded:
                aut.reward(draws[v])
            else:
                aut.penalize(draws[v])
        if len(candidate) < best_size:
            best = frozenset(candidate)
            best_size = len(candidate)
            best_iteration = iteration
        entropy = mean_cover_entropy(net.automata, best)
        records.append(
            IterationRecord(
                iteration, len(candidate), True, rewarded, best_size, entropy
            )
        )
        reason = should_stop(net, best, iteration + 1, config)
        if reason is not None:
            stop = reason
            break
    return RunResult(best, best_size, best_iteration, tuple(records), stop)
