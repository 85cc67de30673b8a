"""Payoff additivity and the per-awakening decomposition.

A game is additive when, within every realization, the payoff effect of
changing the action at one awakening does not depend on what is played at
the others::

    pi(r, a) - pi(r, a with a'_i at i)  ==  pi(r, a' with a_i at i) - pi(r, a')

for every position ``i`` and every pair of profiles ``a, a'``.  An additive
game splits as ``pi(r, a) = c(r) + sum_i pi_{v(r,i)}(a_i)`` where each
``pi_v`` is measured against a default action ``d_v`` (so ``pi_v(d_v) = 0``)
and ``c(r)`` is the all-defaults payoff.

Two scans are provided.  ``"exhaustive"`` checks the equation for every
pair of profiles.  ``"pruned"`` (the default) fixes ``a'_i`` to the first
declared action and lets ``a'`` differ from ``a`` at one other position
only; by telescoping over single-coordinate changes this implies the full
equation, and any failure it finds is itself a valid witness.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ModelError, NotAdditive
from .game import AwakeningEvent, Game


@dataclass(frozen=True)
class Witness:
    """A quadruple ``(r, i, a, a')`` breaking the additivity equation; ``i`` is 1-based."""

    realization: str
    position: int
    profile: tuple[str, ...]
    other: tuple[str, ...]
    lhs: Fraction
    rhs: Fraction

    def __str__(self):
        return (f"realization {self.realization}, awakening {self.position}, "
                f"a={list(self.profile)}, a'={list(self.other)}: "
                f"{self.lhs} != {self.rhs}")


@dataclass(frozen=True)
class AdditivityVerdict:
    additive: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.additive


def _swap(prof, i, action):
    return prof[:i] + (action,) + prof[i + 1:]


def equation_sides(game: Game, rid: str, position: int, a, b) -> tuple[Fraction, Fraction]:
    """Both sides of the additivity equation at 1-based ``position``."""
    a, b = tuple(a), tuple(b)
    i = position - 1
    lhs = game.payoff(rid, a) - game.payoff(rid, _swap(a, i, b[i]))
    rhs = game.payoff(rid, _swap(b, i, a[i])) - game.payoff(rid, b)
    return lhs, rhs


def verify_witness(game: Game, w: Witness) -> bool:
    """True when ``w`` really violates the equation on ``game``."""
    lhs, rhs = equation_sides(game, w.realization, w.position, w.profile, w.other)
    return lhs != rhs


def _exhaustive(game: Game, rid: str):
    profiles = list(game.profiles(rid))
    for i in range(len(game.events_of(rid))):
        for a in profiles:
            for b in profiles:
                lhs, rhs = equation_sides(game, rid, i + 1, a, b)
                if lhs != rhs:
                    return Witness(rid, i + 1, a, b, lhs, rhs)
    return None


def _pruned(game: Game, rid: str):
    events = game.events_of(rid)
    choices = [game.infoset(v.infoset).actions for v in events]
    pay = game.payoff
    for i in range(len(events)):
        d = choices[i][0]
        for a in itertools.product(*choices):
            base = pay(rid, a) - pay(rid, _swap(a, i, d))
            for j in range(len(events)):
                if j == i:
                    continue
                for x in choices[j]:
                    if x == a[j]:
                        continue
                    moved = _swap(a, j, x)
                    other = _swap(moved, i, d)
                    rhs = pay(rid, moved) - pay(rid, other)
                    if base != rhs:
                        return Witness(rid, i + 1, a, other, base, rhs)
    return None


_SCANS = {"pruned": _pruned, "exhaustive": _exhaustive}


def check_additive(game: Game, method: str = "pruned") -> AdditivityVerdict:
    """Scan realizations in declared order; the first witness found wins."""
    scan = _SCANS[method]
    for r in game.realizations:
        w = scan(game, r.id)
        if w is not None:
            return AdditivityVerdict(False, w)
    return AdditivityVerdict(True)


@dataclass(frozen=True)
class Decomposition:
    event_payoffs: dict[AwakeningEvent, dict[str, Fraction]]
    constants: dict[str, Fraction]
    defaults: dict[AwakeningEvent, str]

    def value(self, v: AwakeningEvent, action: str) -> Fraction:
        return self.event_payoffs[v][action]

    def total(self, rid: str, profile) -> Fraction:
        evs = sorted(v for v in self.event_payoffs if v.realization == rid)
        return self.constants[rid] + sum(
            (self.event_payoffs[v][a] for v, a in zip(evs, profile)), Fraction(0))


def _defaults(game: Game, defaults) -> dict[AwakeningEvent, str]:
    chosen = {}
    given = {game.event(k): a for k, a in (defaults or {}).items()}
    for v in game.events:
        actions = game.infoset(v.infoset).actions
        a = given.get(v, actions[0])
        if a not in actions:
            raise ModelError("BAD_ACTION", f"default {a!r} not available at event {v.key}")
        chosen[v] = a
    return chosen


def decompose(game: Game, defaults: Mapping | None = None) -> Decomposition:
    """Per-event payoffs relative to defaults, plus per-realization constants.

    ``defaults`` maps events (or ``"r/i"`` keys) to actions; omitted events
    default to their set's first declared action.  Raises
    :class:`~beautygames.errors.NotAdditive` on non-additive games.
    """
    verdict = check_additive(game)
    if not verdict.additive:
        raise NotAdditive(verdict.witness)
    d = _defaults(game, defaults)
    event_payoffs, constants = {}, {}
    for r in game.realizations:
        evs = game.events_of(r.id)
        base = tuple(d[v] for v in evs)
        constants[r.id] = game.payoff(r.id, base)
        for i, v in enumerate(evs):
            event_payoffs[v] = {
                a: game.payoff(r.id, _swap(base, i, a)) - constants[r.id]
                for a in game.infoset(v.infoset).actions
            }
    return Decomposition(event_payoffs, constants, d)


def reconstruct(decomposition: Decomposition) -> dict[str, dict[tuple[str, ...], Fraction]]:
    """Rebuild the full payoff table ``c(r) + sum_i pi_{v(r,i)}(a_i)``."""
    by_r = defaultdict(list)
    for v in decomposition.event_payoffs:
        by_r[v.realization].append(v)
    table = {}
    for rid, c in decomposition.constants.items():
        evs = sorted(by_r[rid])
        table[rid] = {
            prof: c + sum((decomposition.event_payoffs[v][a] for v, a in zip(evs, prof)),
                          Fraction(0))
            for prof in itertools.product(*(list(decomposition.event_payoffs[v]) for v in evs))
        }
    return table
