"""Variable-structure learning automaton.

An automaton keeps a probability vector over r actions and updates it on
environment feedback. A favorable response moves mass toward the chosen
action, an unfavorable one spreads mass away from it:

    reward(i):    p_i <- p_i + a * (1 - p_i),  p_j <- (1 - a) * p_j
    penalize(i):  p_i <- (1 - b) * p_i,        p_j <- b/(r-1) + (1 - b) * p_j

With b = 0 penalties are a no-op (reward-inaction); b = a is the symmetric
reward-penalty scheme; 0 < b < a penalizes weakly.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# floating-point drift beyond this triggers renormalization of the vector
SUM_DRIFT_TOLERANCE = 1e-9


class SchemeKind(enum.Enum):
    REWARD_PENALTY = "reward_penalty"
    REWARD_EPSILON_PENALTY = "reward_epsilon_penalty"
    REWARD_INACTION = "reward_inaction"


@dataclass(frozen=True)
class ReinforcementScheme:
    """Update-rule family plus its reward rate a and penalty rate b."""

    kind: SchemeKind
    a: float
    b: float

    def __post_init__(self) -> None:
        if not 0.0 < self.a <= 1.0:
            raise ValueError(f"reward rate a must be in (0,1], got {self.a}")
        if not 0.0 <= self.b < 1.0:
            raise ValueError(f"penalty rate b must be in [0,1), got {self.b}")
        if self.kind is SchemeKind.REWARD_PENALTY and self.a != self.b:
            raise ValueError("reward-penalty requires a == b")
        if self.kind is SchemeKind.REWARD_EPSILON_PENALTY and not (
            0.0 < self.b < self.a
        ):
            raise ValueError("reward-epsilon-penalty requires 0 < b < a")
        if self.kind is SchemeKind.REWARD_INACTION and self.b != 0.0:
            raise ValueError("reward-inaction requires b == 0")


def reward_penalty(a: float) -> ReinforcementScheme:
    return ReinforcementScheme(SchemeKind.REWARD_PENALTY, a, a)


def reward_epsilon_penalty(a: float, b: float) -> ReinforcementScheme:
    return ReinforcementScheme(SchemeKind.REWARD_EPSILON_PENALTY, a, b)


def reward_inaction(a: float) -> ReinforcementScheme:
    return ReinforcementScheme(SchemeKind.REWARD_INACTION, a, 0.0)


class Automaton:
    """Probability vector over action labels, updated in place."""

    __slots__ = ("p", "scheme", "action_labels")

    def __init__(
        self,
        p: Sequence[float] | np.ndarray,
        scheme: ReinforcementScheme,
        action_labels: Sequence[int],
    ) -> None:
        self.p = np.asarray(p, dtype=np.float64)
        self.scheme = scheme
        self.action_labels = tuple(action_labels)
        if len(self.p) != len(self.action_labels):
            raise ValueError("probability vector and labels disagree in length")

    @property
    def r(self) -> int:
        return len(self.p)

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.r:
            raise IndexError(f"action index {i} out of range for r={self.r}")

    def reward(self, i: int) -> None:
        """Favorable response for action i."""
        self._check_index(i)
        a = self.scheme.a
        old = self.p[i]
        self.p *= 1.0 - a
        self.p[i] = old + a * (1.0 - old)
        self._renormalize_if_drifted()

    def penalize(self, i: int) -> None:
        """Unfavorable response for action i; identity when b == 0."""
        self._check_index(i)
        b = self.scheme.b
        if b == 0.0:
            return
        if self.r == 1:
            self.p[0] = 1.0
            return
        old = self.p[i]
        self.p *= 1.0 - b
        self.p += b / (self.r - 1)
        self.p[i] = (1.0 - b) * old
        self._renormalize_if_drifted()

    def _renormalize_if_drifted(self) -> None:
        total = float(self.p.sum())
        if abs(total - 1.0) > SUM_DRIFT_TOLERANCE:
            self.p /= total

    def select_action(
        self, rng: np.random.Generator, mask: Iterable[int] | None = None
    ) -> int | None:
        """Sample an action index from p, optionally restricted to mask.

        Masking renormalizes per call and never touches the stored vector.
        Returns None when the masked distribution has no mass (no admissible
        action).
        """
        if mask is None:
            u = rng.random()
            cum = np.cumsum(self.p)
            return int(min(np.searchsorted(cum, u, side="right"), self.r - 1))
        allowed = sorted(mask)
        if not allowed:
            return None
        weights = self.p[allowed]
        total = float(weights.sum())
        if total <= 0.0:
            return None
        u = rng.random() * total
        k = int(np.searchsorted(np.cumsum(weights), u, side="right"))
        return allowed[min(k, len(allowed) - 1)]

    def normalized_entropy(self) -> float:
        """Shannon entropy of p in bits, rescaled to [0,1] by log2(r).

        Degenerate vectors give 0; the uniform vector gives 1. Single-action
        automata are defined to have entropy 0.
        """
        if self.r == 1:
            return 0.0
        # equal masses mean exactly 1 by definition; summing log terms
        # instead would land a few ulps off for most r
        if np.all(self.p == self.p[0]):
            return 1.0
        pos = self.p[self.p > 0.0]
        raw = float(-(pos * np.log2(pos)).sum())
        h = raw / math.log2(self.r)
        return min(max(h, 0.0), 1.0)


def new_uniform(
    action_labels: Sequence[int], scheme: ReinforcementScheme
) -> Automaton:
    """Automaton with equal probability on every action."""
    r = len(action_labels)
    if r == 0:
        raise ValueError("an automaton needs at least one action")
    return Automaton(np.full(r, 1.0 / r), scheme, action_labels)
