"""Ex ante evaluation and the verdicts built on it.

``ex_ante`` is the expected total payout of a uniform policy before the
coin is tossed.  The brute-force optimum maximises it over every policy and
is the yardstick for the other checks: whether the policies a credence rule
and decision theory settle on are ex ante optimal in additive games, and
whether any of them accepts bets that lose in every realization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .additivity import AdditivityVerdict, Decomposition, check_additive, decompose
from .credence import CredenceProfile, credence_for
from .decision import Theory, stable_policies
from .errors import ModelError
from .game import Game, Policy, check_policy, enumerate_policies
from .rational import decimal, format_rational


def ex_ante(game: Game, policy: Policy) -> Fraction:
    """``sum_r P(r) * payoff(r, profile played by policy)``."""
    check_policy(game, policy)
    return sum((r.probability * game.payoff(r.id, game.play(r.id, policy))
                for r in game.realizations), Fraction(0))


def ex_ante_by_realization(decomposition: Decomposition, game: Game, policy: Policy) -> Fraction:
    """Ex ante value summed realization by realization through the decomposition."""
    total = Fraction(0)
    for r in game.realizations:
        inner = decomposition.constants[r.id] + sum(
            (decomposition.value(v, policy[v.infoset]) for v in game.events_of(r.id)),
            Fraction(0))
        total += r.probability * inner
    return total


def ex_ante_by_infoset(decomposition: Decomposition, game: Game, policy: Policy) -> Fraction:
    """The same value regrouped: constants first, then one contribution per set."""
    total = sum((r.probability * decomposition.constants[r.id] for r in game.realizations),
                Fraction(0))
    for s in game.infosets:
        total += set_contribution(decomposition, game, s.label, policy[s.label])
    return total


def set_contribution(decomposition: Decomposition, game: Game, infoset: str,
                     action: str) -> Fraction:
    """``sum_{v in I} P(r(v)) * pi_v(action)``."""
    return sum((game.probability(v.realization) * decomposition.value(v, action)
                for v in game.events_in(infoset)), Fraction(0))


def brute_force_optimum(game: Game) -> tuple[Fraction, list[Policy]]:
    values = [(ex_ante(game, p), p) for p in enumerate_policies(game)]
    best = max(v for v, _ in values)
    return best, [p for v, p in values if v == best]


def constructive_policy(game: Game, credence: CredenceProfile,
                        decomposition: Decomposition | None = None) -> Policy:
    """Pick, set by set, the first action maximising ``sum_{v in I} P(v|I) pi_v(a)``.

    Needs an additive game.  Under CDT this policy is stable whatever the
    conjecture, because the decomposition removes every interaction between
    awakenings.
    """
    if decomposition is None:
        decomposition = decompose(game)
    choice = {}
    for s in game.infosets:
        weights = credence.event[s.label]
        scores = {a: sum((p * decomposition.value(v, a) for v, p in weights.items()),
                         Fraction(0))
                  for a in s.actions}
        top = max(scores.values())
        choice[s.label] = next(a for a in s.actions if scores[a] == top)
    return Policy.from_mapping(choice)


class PropositionVerdict(enum.Enum):
    CONFIRMS = "CONFIRMS"
    VIOLATES = "VIOLATES"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    NO_STABLE_POLICY = "NO_STABLE_POLICY"


@dataclass(frozen=True)
class PropositionResult:
    verdict: PropositionVerdict
    optimum: Fraction
    optimal_policies: list[Policy]
    stable: list[tuple[Policy, Fraction]]
    witness: Policy | None = None
    additivity: AdditivityVerdict | None = None
    constructive: Policy | None = None


def check_proposition(game: Game, credence="thirder", theory=Theory.CDT) -> PropositionResult:
    """Are all stable policies ex ante optimal?  Only asked of additive games."""
    theory = Theory.parse(theory)
    profile = credence_for(game, credence)
    optimum, best = brute_force_optimum(game)
    additivity = check_additive(game)
    stable = [(p, ex_ante(game, p)) for p in stable_policies(game, profile, theory)]

    constructive = None
    if additivity.additive and theory is Theory.CDT:
        constructive = constructive_policy(game, profile)
        if constructive not in {p for p, _ in stable}:
            raise RuntimeError(f"per-set argmax policy {constructive} missing from stable scan")

    def result(verdict, witness=None):
        return PropositionResult(verdict, optimum, best, stable, witness, additivity, constructive)

    if not additivity.additive:
        return result(PropositionVerdict.NOT_APPLICABLE)
    if not stable:
        return result(PropositionVerdict.NO_STABLE_POLICY)
    for p, value in stable:
        if value < optimum:
            return result(PropositionVerdict.VIOLATES, p)
    return result(PropositionVerdict.CONFIRMS)


@dataclass(frozen=True)
class SureLoss:
    sure_loss: bool
    worst: Fraction
    realization: str | None = None  # a realization paying >= 0 when there is no sure loss

    def __bool__(self):
        return self.sure_loss


def sure_loss(game: Game, policy: Policy) -> SureLoss:
    """Does ``policy`` pay strictly less than zero in every realization?"""
    check_policy(game, policy)
    outcomes = [(r.id, game.payoff(r.id, game.play(r.id, policy))) for r in game.realizations]
    worst = min(x for _, x in outcomes)
    for rid, x in outcomes:
        if x >= 0:
            return SureLoss(False, worst, rid)
    return SureLoss(True, worst)


class DutchBookVerdict(enum.Enum):
    INVULNERABLE = "INVULNERABLE"
    VULNERABLE = "VULNERABLE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class DutchBookResult:
    verdict: DutchBookVerdict
    policy: Policy | None = None
    loss: SureLoss | None = None
    reason: str = ""


def decline_policy(game: Game) -> Policy | None:
    if any(s.decline_action is None for s in game.infosets):
        return None
    return Policy.from_mapping({s.label: s.decline_action for s in game.infosets})


def dutch_book_verdict(game: Game, credence="thirder", theory=Theory.CDT) -> DutchBookResult:
    """Does some stable policy accept a book that loses in every realization?

    Applies only when every set declares a decline action; declining
    everywhere must then pay exactly 0, otherwise ``BAD_NULL`` is raised.
    """
    decline = decline_policy(game)
    if decline is None:
        missing = [s.label for s in game.infosets if s.decline_action is None]
        return DutchBookResult(DutchBookVerdict.NOT_APPLICABLE,
                               reason=f"no decline action in {missing}")
    for r in game.realizations:
        x = game.payoff(r.id, game.play(r.id, decline))
        if x != 0:
            raise ModelError("BAD_NULL",
                             f"declining everything pays {format_rational(x)} in {r.id!r}")
    for p in stable_policies(game, credence_for(game, credence), theory):
        loss = sure_loss(game, p)
        if loss:
            return DutchBookResult(DutchBookVerdict.VULNERABLE, p, loss)
    return DutchBookResult(DutchBookVerdict.INVULNERABLE)


@dataclass
class AnalysisReport:
    game_id: str
    rule: str
    theory: Theory
    stable: list[tuple[Policy, Fraction]]
    optimum: Fraction
    optimal_policies: list[Policy]
    additivity: AdditivityVerdict
    proposition: PropositionResult
    dutch_book: DutchBookResult
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        fr = format_rational
        prop = self.proposition
        book = self.dutch_book
        w = self.additivity.witness
        return {
            "game": self.game_id,
            "credence": self.rule,
            "theory": self.theory.value,
            "stable_policies": [{"policy": p.as_dict(), "ex_ante": fr(v)} for p, v in self.stable],
            "optimum": {"value": fr(self.optimum),
                        "policies": [p.as_dict() for p in self.optimal_policies]},
            "additive": self.additivity.additive,
            "additivity_witness": None if w is None else witness_dict(w),
            "proposition": {
                "verdict": prop.verdict.value,
                "witness": None if prop.witness is None else prop.witness.as_dict(),
            },
            "dutch_book": {
                "verdict": book.verdict.value,
                "policy": None if book.policy is None else book.policy.as_dict(),
                "worst_payoff": None if book.loss is None else fr(book.loss.worst),
            },
        }

    def to_table(self) -> str:
        rows = [("game", self.game_id), ("credence", self.rule),
                ("theory", self.theory.value.upper())]
        if self.stable:
            for p, v in self.stable:
                rows.append(("stable policy", f"{p}  ex ante {format_rational(v)} ({decimal(v)})"))
        else:
            rows.append(("stable policy", "none"))
        rows.append(("optimum", f"{format_rational(self.optimum)} ({decimal(self.optimum)}) at "
                     + "; ".join(str(p) for p in self.optimal_policies)))
        rows.append(("additive", "yes" if self.additivity.additive else
                     f"no ({self.additivity.witness})"))
        rows.append(("proposition", self.proposition.verdict.value
                     + (f" (witness {self.proposition.witness})" if self.proposition.witness else "")))
        book = self.dutch_book.verdict.value
        if self.dutch_book.loss is not None:
            book += (f" ({self.dutch_book.policy}, worst payoff "
                     f"{format_rational(self.dutch_book.loss.worst)})")
        rows.append(("dutch book", book))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def witness_dict(w) -> dict:
    return {"realization": w.realization, "position": w.position,
            "profile": list(w.profile), "other": list(w.other),
            "lhs": format_rational(w.lhs), "rhs": format_rational(w.rhs)}


def analyze(game: Game, credence="thirder", theory=Theory.CDT, game_id: str = "game") -> AnalysisReport:
    theory = Theory.parse(theory)
    profile = credence_for(game, credence)
    prop = check_proposition(game, profile, theory)
    notes = []
    try:
        book = dutch_book_verdict(game, profile, theory)
    except ModelError as exc:
        book = DutchBookResult(DutchBookVerdict.NOT_APPLICABLE, reason=exc.message)
        notes.append(str(exc))
    return AnalysisReport(game_id, profile.rule, theory, prop.stable, prop.optimum,
                          prop.optimal_policies, prop.additivity, prop, book, notes)
