"""Action values under causal and evidential decision theory.

The agent evaluates an action at an information set holding a conjecture:
every awakening she does not control plays the conjectured uniform policy.

* CDT: only the current awakening switches to the candidate action; every
  other awakening, including siblings in the same set, follows the conjecture.
* EDT: the action is taken as evidence that it is played at every awakening
  whose set shares the current set's symmetry class.

Both return ``sum_{v in I} P(v|I) * payoff(r(v), profile)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .credence import CredenceProfile, credence_for
from .errors import ModelError
from .game import Game, Policy, check_policy, enumerate_policies


class Theory(enum.Enum):
    CDT = "cdt"
    EDT = "edt"

    @classmethod
    def parse(cls, value) -> "Theory":
        if isinstance(value, Theory):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ModelError("UNKNOWN_THEORY", f"unknown decision theory {value!r}") from None


@dataclass(frozen=True)
class DecisionContext:
    game: Game
    credence: CredenceProfile
    theory: Theory
    conjecture: Policy

    def __post_init__(self):
        check_policy(self.game, self.conjecture)
        if not self.credence.covers(self.game):
            raise ModelError("BAD_CREDENCE", "credence profile does not cover every information set")


def _check_action(game: Game, infoset: str, action: str):
    s = game.infoset(infoset)
    if action not in s.actions:
        raise ModelError("BAD_ACTION", f"action {action!r} not available in {infoset!r}")
    return s


def _expected(ctx: DecisionContext, infoset: str, plays) -> Fraction:
    game, conj = ctx.game, ctx.conjecture
    total = Fraction(0)
    for v, p in ctx.credence.event[infoset].items():
        if p == 0:
            continue
        prof = []
        for w in game.events_of(v.realization):
            a = plays(v, w)
            prof.append(conj[w.infoset] if a is None else a)
        total += p * game.payoff(v.realization, prof)
    return total


def cdt_value(ctx: DecisionContext, infoset: str, action: str) -> Fraction:
    """Expected payout of playing ``action`` at this awakening only."""
    _check_action(ctx.game, infoset, action)
    return _expected(ctx, infoset, lambda here, w: action if w == here else None)


def edt_value(ctx: DecisionContext, infoset: str, action: str) -> Fraction:
    """Expected payout conditional on ``action`` being played across the symmetry class."""
    game = ctx.game
    cls = _check_action(game, infoset, action).symmetry
    scope = {s.label for s in game.infosets if s.symmetry == cls}
    for label in scope:
        if action not in game.infoset(label).actions:
            raise ModelError("SCOPE_ACTION_MISMATCH",
                             f"action {action!r} unavailable in {label!r}, same class as {infoset!r}")
    return _expected(ctx, infoset, lambda here, w: action if w.infoset in scope else None)


def action_value(ctx: DecisionContext, infoset: str, action: str) -> Fraction:
    if ctx.theory is Theory.CDT:
        return cdt_value(ctx, infoset, action)
    return edt_value(ctx, infoset, action)


def action_values(ctx: DecisionContext, infoset: str) -> dict[str, Fraction]:
    return {a: action_value(ctx, infoset, a) for a in ctx.game.infoset(infoset).actions}


def best_response(ctx: DecisionContext, infoset: str) -> tuple[str, ...]:
    """All maximising actions, in declared order."""
    values = action_values(ctx, infoset)
    top = max(values.values())
    return tuple(a for a, x in values.items() if x == top)


def is_stable(game: Game, credence: CredenceProfile, theory: Theory, policy: Policy) -> bool:
    ctx = DecisionContext(game, credence, theory, policy)
    return all(policy[s.label] in best_response(ctx, s.label) for s in game.infosets)


def stable_policies(game: Game, credence, theory) -> list[Policy]:
    """Policies that are a best response to themselves at every set, in enumeration order."""
    credence = credence_for(game, credence)
    theory = Theory.parse(theory)
    return [p for p in enumerate_policies(game) if is_stable(game, credence, theory, p)]
