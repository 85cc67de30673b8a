"""Credences upon awakening, per information set.

For a set ``I`` the profile holds a credence over realizations, ``P(r|I)``,
and over the awakening events in the set, ``P(v|I)``.  Three rules:

* thirder: ``P(r|I)`` proportional to ``P(r) * nu(I, r)``; each event of
  ``r`` in ``I`` gets ``P(r) / sum_r' P(r') nu(I, r')``.
* halfer: ``P(r|I)`` proportional to ``P(r)`` over realizations that reach
  ``I`` at all, split evenly over the ``nu(I, r)`` events.
* custom: arbitrary nonnegative event weights normalised within each set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ModelError
from .game import AwakeningEvent, Game
from .rational import as_fraction


@dataclass(frozen=True)
class CredenceProfile:
    rule: str
    realization: dict[str, dict[str, Fraction]]
    event: dict[str, dict[AwakeningEvent, Fraction]]

    def of_realization(self, infoset: str, rid: str) -> Fraction:
        return self.realization[infoset][rid]

    def of_event(self, infoset: str, v: AwakeningEvent) -> Fraction:
        return self.event[infoset][v]

    def covers(self, game: Game) -> bool:
        return all(s.label in self.event for s in game.infosets)


def nu(game: Game, infoset: str, rid: str) -> int:
    """How many awakenings of realization ``rid`` fall in information set ``infoset``."""
    return game.nu(infoset, rid)


def _from_event_weights(game: Game, rule: str, weights) -> CredenceProfile:
    realization, event = {}, {}
    for s in game.infosets:
        evs = game.events_in(s.label)
        if not evs:
            raise ModelError("EMPTY_INFOSET", f"information set {s.label!r} has no awakenings")
        w = {v: weights(v) for v in evs}
        total = sum(w.values(), Fraction(0))
        if total == 0:
            raise ModelError("ZERO_MASS", f"all weight in {s.label!r} is zero")
        event[s.label] = {v: x / total for v, x in w.items()}
        per_r = {r.id: Fraction(0) for r in game.realizations}
        for v, p in event[s.label].items():
            per_r[v.realization] += p
        realization[s.label] = per_r
    return CredenceProfile(rule, realization, event)


def thirder(game: Game) -> CredenceProfile:
    """Each awakening weighted by the prior of its realization."""
    return _from_event_weights(game, "thirder", lambda v: game.probability(v.realization))


def halfer(game: Game) -> CredenceProfile:
    """Compatible-prior renormalisation, even split within a realization."""
    return _from_event_weights(
        game, "halfer",
        lambda v: game.probability(v.realization) / game.nu(v.infoset, v.realization),
    )


def custom(game: Game, weights: Mapping) -> CredenceProfile:
    """Normalise user weights within each set.

    ``weights`` maps events (or their ``"r/i"`` keys) to nonnegative
    rationals; events left out weigh zero.
    """
    w: dict[AwakeningEvent, Fraction] = {}
    for key, x in weights.items():
        v = game.event(key)
        x = as_fraction(x)
        if x < 0:
            raise ModelError("NEGATIVE_WEIGHT", f"weight {x} on event {v.key}")
        w[v] = x
    return _from_event_weights(game, "custom", lambda v: w.get(v, Fraction(0)))


RULES = {"thirder": thirder, "halfer": halfer}


def credence_for(game: Game, rule) -> CredenceProfile:
    """Resolve a rule name, a weight mapping or a ready profile."""
    if isinstance(rule, CredenceProfile):
        return rule
    if isinstance(rule, str):
        try:
            return RULES[rule](game)
        except KeyError:
            raise ModelError("UNKNOWN_RULE", f"unknown credence rule {rule!r}") from None
    return custom(game, rule)
