"""Random small games for property tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .game import GameSpec, InformationSet, Realization

DEFAULT_GRID = tuple(Fraction(k) for k in range(-3, 6))


@dataclass(frozen=True)
class GeneratorParams:
    """Size bounds and payoff grid for :func:`random_game`.

    With ``with_decline`` every set gains a ``decline`` action worth zero at
    every awakening, and realization constants are zero, so declining
    everywhere pays exactly 0 (a bet game).  That only makes sense for
    additive games.
    """

    seed: int = 0
    additive: bool = True
    max_realizations: int = 4
    max_awakenings: int = 3
    max_infosets: int = 3
    max_actions: int = 3
    grid: tuple[Fraction, ...] = DEFAULT_GRID
    with_decline: bool = False

    def __post_init__(self):
        bounds = (self.max_realizations, self.max_awakenings, self.max_infosets, self.max_actions)
        if min(bounds) < 1:
            raise ValueError("all size bounds must be at least 1")
        if not self.grid:
            raise ValueError("payoff grid must be nonempty")
        if self.with_decline and not self.additive:
            raise ValueError("bet games are generated additive")


def random_game(params: GeneratorParams) -> GameSpec:
    """A valid game drawn deterministically from ``params.seed``."""
    rng = random.Random(params.seed)
    grid = [Fraction(x) for x in params.grid]

    n_sets = rng.randint(1, params.max_infosets)
    labels = [f"I{k + 1}" for k in range(n_sets)]
    n_real = rng.randint(1, params.max_realizations)
    weights = [rng.randint(1, 4) for _ in range(n_real)]
    schedules = [[rng.choice(labels) for _ in range(rng.randint(1, params.max_awakenings))]
                 for _ in range(n_real)]

    used = [l for l in labels if any(l in sch for sch in schedules)]
    rename = {old: f"I{k + 1}" for k, old in enumerate(used)}
    schedules = [[rename[l] for l in sch] for sch in schedules]

    infosets = []
    for label in rename.values():
        if params.with_decline:
            # decline takes one of the max_actions slots
            actions = [f"a{k}" for k in range(rng.randint(1, max(1, params.max_actions - 1)))]
            actions.append("decline")
            decline = "decline"
        else:
            actions = [f"a{k}" for k in range(rng.randint(1, params.max_actions))]
            decline = None
        infosets.append(InformationSet(label, tuple(actions), decline_action=decline))
    by_label = {s.label: s for s in infosets}

    total = sum(weights)
    realizations = tuple(Realization(f"r{k}", Fraction(w, total), tuple(sch))
                         for k, (w, sch) in enumerate(zip(weights, schedules)))

    payoffs = {}
    for r in realizations:
        choices = [by_label[l].actions for l in r.awakenings]
        if params.additive:
            terms = [{a: (Fraction(0) if a == "decline" else rng.choice(grid)) for a in acts}
                     for acts in choices]
            const = Fraction(0) if params.with_decline else rng.choice(grid)
            table = {p: const + sum((t[a] for t, a in zip(terms, p)), Fraction(0))
                     for p in itertools.product(*choices)}
        else:
            table = {p: rng.choice(grid) for p in itertools.product(*choices)}
        payoffs[r.id] = table
    return GameSpec(realizations, tuple(infosets), payoffs)
