"""Seeded long-run frequency simulation.

Each trial draws one realization from the prior and counts every awakening
it produces.  Within an information set, the share of awakenings belonging
to each event is the long-run frequency that thirder credences match.

Draws are exact: realizations are picked by an integer uniform on
``[0, D)`` against cumulative numerators over the common denominator ``D``,
using numpy's PCG64 generator.  Counts merge by addition, so independent
batches can be combined.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .game import AwakeningEvent, Game

_MAX_DENOMINATOR = 2**62


@dataclass(frozen=True)
class MonteCarloResult:
    game: Game
    trials: int
    realization_counts: dict[str, int]

    def event_counts(self) -> dict[str, dict[AwakeningEvent, int]]:
        return {s.label: {v: self.realization_counts[v.realization]
                          for v in self.game.events_in(s.label)}
                for s in self.game.infosets}

    def frequencies(self) -> dict[str, dict[AwakeningEvent, Fraction]]:
        """Per set, each event's share of that set's awakenings (exact count ratios)."""
        out = {}
        for label, counts in self.event_counts().items():
            total = sum(counts.values())
            out[label] = {v: Fraction(c, total) if total else Fraction(0)
                          for v, c in counts.items()}
        return out

    def realization_frequencies(self) -> dict[str, dict[str, Fraction]]:
        out = {}
        for label, freqs in self.frequencies().items():
            per_r = {r.id: Fraction(0) for r in self.game.realizations}
            for v, f in freqs.items():
                per_r[v.realization] += f
            out[label] = per_r
        return out

    def merge(self, other: "MonteCarloResult") -> "MonteCarloResult":
        counts = Counter(self.realization_counts)
        counts.update(other.realization_counts)
        return MonteCarloResult(self.game, self.trials + other.trials,
                                {r.id: counts[r.id] for r in self.game.realizations})


def sample_realizations(game: Game, trials: int, seed: int) -> np.ndarray:
    """Indices into ``game.realizations`` for ``trials`` independent draws."""
    probs = [Fraction(r.probability) for r in game.realizations]
    den = lcm(*(p.denominator for p in probs))
    if den >= _MAX_DENOMINATOR:
        raise ValueError(f"common denominator {den} too large for exact sampling")
    cumulative = np.cumsum([p.numerator * (den // p.denominator) for p in probs])
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.integers(0, den, size=trials, dtype=np.int64)
    return np.searchsorted(cumulative, draws, side="right")


def monte_carlo(game: Game, trials: int, seed: int) -> MonteCarloResult:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    idx = sample_realizations(game, trials, seed)
    counts = np.bincount(idx, minlength=len(game.realizations))
    return MonteCarloResult(game, trials,
                            {r.id: int(c) for r, c in zip(game.realizations, counts)})
