"""Game structure: realizations, awakening events, information sets, payoffs.

A game starts with one chance move that picks a realization ``r`` with prior
``P(r)``.  Realization ``r`` wakes the agent ``n_r`` times; the ``i``-th
awakening lies in a named information set, and the agent picks one action
from that set's action list.  The total payout of ``r`` is looked up in an
explicit table keyed by the full action profile ``(a_1, ..., a_{n_r})``.

A :class:`GameSpec` is a raw, possibly inconsistent, description.  Passing it
through :func:`validate` yields a :class:`Game` with lookup indexes; every
other module works on validated games only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

from .errors import InvalidGame, ModelError
from .rational import as_fraction, format_rational

Profile = tuple  # tuple[str, ...], one action per awakening of a realization


@dataclass(frozen=True)
class InformationSet:
    label: str
    actions: tuple[str, ...]
    symmetry_class: str | None = None
    decline_action: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))

    @property
    def symmetry(self) -> str:
        """Symmetry class label; a set is its own class unless told otherwise."""
        return self.label if self.symmetry_class is None else self.symmetry_class


@dataclass(frozen=True)
class Realization:
    id: str
    probability: Fraction
    awakenings: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "awakenings", tuple(self.awakenings))

    @property
    def n(self) -> int:
        return len(self.awakenings)


@dataclass(frozen=True, order=True)
class AwakeningEvent:
    """The ``index``-th awakening (1-based) of ``realization``."""

    realization: str
    index: int
    infoset: str = field(compare=False)

    @property
    def key(self) -> str:
        return f"{self.realization}/{self.index}"

    def __str__(self):
        return self.key


@dataclass
class GameSpec:
    realizations: tuple[Realization, ...]
    infosets: tuple[InformationSet, ...]
    payoffs: dict[str, dict[Profile, Fraction]]

    def __post_init__(self):
        self.realizations = tuple(self.realizations)
        self.infosets = tuple(self.infosets)
        self.payoffs = {
            r: {tuple(p): as_fraction(v) for p, v in table.items()}
            for r, table in self.payoffs.items()
        }


@dataclass(frozen=True)
class Violation:
    code: str
    element: str
    message: str

    def __str__(self):
        return f"{self.code} at {self.element}: {self.message}"


def find_violations(spec: GameSpec) -> list[Violation]:
    """Every invariant breach in ``spec``; empty means the spec is valid."""
    out: list[Violation] = []

    def bad(code, element, message):
        out.append(Violation(code, element, message))

    sets: dict[str, InformationSet] = {}
    for s in spec.infosets:
        if s.label in sets:
            bad("DUPLICATE_LABEL", f"infoset {s.label}", "information set label repeated")
        sets[s.label] = s
        if not s.actions:
            bad("EMPTY_ACTIONS", f"infoset {s.label}", "action list is empty")
        seen = set()
        for a in s.actions:
            if a in seen:
                bad("DUPLICATE_LABEL", f"infoset {s.label}", f"action {a!r} repeated")
            seen.add(a)
        if s.decline_action is not None and s.decline_action not in s.actions:
            bad("BAD_DECLINE", f"infoset {s.label}",
                f"decline action {s.decline_action!r} is not among {list(s.actions)}")

    reals: dict[str, Realization] = {}
    total = Fraction(0)
    for r in spec.realizations:
        if r.id in reals:
            bad("DUPLICATE_LABEL", f"realization {r.id}", "realization id repeated")
        reals[r.id] = r
        p = r.probability
        if not isinstance(p, Fraction) and not isinstance(p, int):
            bad("BAD_RATIONAL", f"realization {r.id}", f"probability {p!r} is not exact")
            continue
        if p < 0 or p > 1:
            bad("BAD_PROBABILITY", f"realization {r.id}",
                f"probability {format_rational(p)} outside [0, 1]")
        total += p
        if r.n < 1:
            bad("NO_AWAKENINGS", f"realization {r.id}", "realization must awaken at least once")
        for i, label in enumerate(r.awakenings, 1):
            if label not in sets:
                bad("UNKNOWN_LABEL", f"realization {r.id} awakening {i}",
                    f"unknown information set {label!r}")
    if not spec.realizations:
        bad("PROBABILITY_SUM", "realizations", "no realizations declared")
    elif total != 1:
        bad("PROBABILITY_SUM", "realizations",
            f"probabilities sum to {format_rational(total)}, not 1")

    for rid, table in spec.payoffs.items():
        if rid not in reals:
            bad("UNKNOWN_LABEL", f"payoffs {rid}", f"unknown realization {rid!r}")
            continue
        r = reals[rid]
        for prof in table:
            if len(prof) != r.n:
                bad("BAD_PROFILE", f"payoffs {rid} {list(prof)}",
                    f"profile length {len(prof)} but realization has {r.n} awakenings")
                continue
            for i, (a, label) in enumerate(zip(prof, r.awakenings), 1):
                s = sets.get(label)
                if s is not None and a not in s.actions:
                    bad("UNKNOWN_LABEL", f"payoffs {rid} {list(prof)}",
                        f"action {a!r} at awakening {i} not available in {label}")

    for rid, r in reals.items():
        if any(label not in sets for label in r.awakenings):
            continue
        table = spec.payoffs.get(rid, {})
        choices = [sets[label].actions for label in r.awakenings]
        missing = [p for p in itertools.product(*choices) if p not in table]
        if missing:
            shown = ", ".join(str(list(p)) for p in missing[:4])
            more = f" and {len(missing) - 4} more" if len(missing) > 4 else ""
            bad("INCOMPLETE_PAYOFFS", f"payoffs {rid}", f"missing profiles {shown}{more}")
    return out


def validate(spec: GameSpec) -> "Game":
    """Return the validated game, or raise :class:`InvalidGame` listing all violations."""
    if isinstance(spec, Game):
        return spec
    violations = find_violations(spec)
    if violations:
        raise InvalidGame(violations)
    return Game(spec)


class Game:
    """A validated game with lookup indexes.  Treat as immutable."""

    def __init__(self, spec: GameSpec):
        self.spec = spec
        self.realizations = spec.realizations
        self.infosets = spec.infosets
        self._reals = {r.id: r for r in spec.realizations}
        self._sets = {s.label: s for s in spec.infosets}
        self._payoffs = spec.payoffs
        self._events_of: dict[str, tuple[AwakeningEvent, ...]] = {}
        self._events_in: dict[str, list[AwakeningEvent]] = {s.label: [] for s in spec.infosets}
        for r in spec.realizations:
            evs = tuple(AwakeningEvent(r.id, i, label) for i, label in enumerate(r.awakenings, 1))
            self._events_of[r.id] = evs
            for v in evs:
                self._events_in[v.infoset].append(v)
        self.events = tuple(v for r in spec.realizations for v in self._events_of[r.id])
        self._event_index = {v.key: v for v in self.events}

    def __eq__(self, other):
        if isinstance(other, Game):
            return self.spec == other.spec
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return (f"Game(realizations={[r.id for r in self.realizations]}, "
                f"infosets={[s.label for s in self.infosets]})")

    @property
    def infoset_labels(self) -> list[str]:
        return [s.label for s in self.infosets]

    def realization(self, rid: str) -> Realization:
        try:
            return self._reals[rid]
        except KeyError:
            raise ModelError("UNKNOWN_LABEL", f"unknown realization {rid!r}") from None

    def infoset(self, label: str) -> InformationSet:
        try:
            return self._sets[label]
        except KeyError:
            raise ModelError("UNKNOWN_LABEL", f"unknown information set {label!r}") from None

    def event(self, key) -> AwakeningEvent:
        """Look up an event by ``"r/i"`` key or by an :class:`AwakeningEvent`."""
        if isinstance(key, AwakeningEvent):
            key = key.key
        try:
            return self._event_index[key]
        except KeyError:
            raise ModelError("UNKNOWN_LABEL", f"unknown awakening event {key!r}") from None

    def probability(self, rid: str) -> Fraction:
        return Fraction(self.realization(rid).probability)

    def events_of(self, rid: str) -> tuple[AwakeningEvent, ...]:
        self.realization(rid)
        return self._events_of[rid]

    def events_in(self, label: str) -> tuple[AwakeningEvent, ...]:
        self.infoset(label)
        return tuple(self._events_in[label])

    def nu(self, label: str, rid: str) -> int:
        """Number of awakenings of realization ``rid`` that fall in set ``label``."""
        self.infoset(label)
        return sum(1 for v in self.events_of(rid) if v.infoset == label)

    def payoff(self, rid: str, profile) -> Fraction:
        try:
            return self._payoffs[rid][tuple(profile)]
        except KeyError:
            raise ModelError("BAD_ACTION",
                             f"no payoff for {rid!r} with profile {list(profile)}") from None

    def profiles(self, rid: str) -> Iterator[Profile]:
        """All admissible profiles of a realization, in declared action order."""
        return itertools.product(*(self._sets[v.infoset].actions for v in self.events_of(rid)))

    def profile(self, rid: str, choose: Callable[[AwakeningEvent], str]) -> Profile:
        return tuple(choose(v) for v in self._events_of[rid])

    def play(self, rid: str, policy: "Policy") -> Profile:
        """Profile induced in realization ``rid`` by a uniform policy."""
        return tuple(policy[v.infoset] for v in self._events_of[rid])


@dataclass(frozen=True)
class Policy:
    """A uniform pure policy: one action per information set.

    Stored as ``(label, action)`` pairs sorted by label, so equal policies
    compare and hash equal regardless of construction order.
    """

    choices: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(sorted(tuple(c) for c in self.choices)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str]) -> "Policy":
        return cls(tuple(mapping.items()))

    def __getitem__(self, label: str) -> str:
        for s, a in self.choices:
            if s == label:
                return a
        raise KeyError(label)

    def as_dict(self) -> dict[str, str]:
        return dict(self.choices)

    def literal(self) -> str:
        actions = {a for _, a in self.choices}
        if len(actions) == 1:
            return f"all:{actions.pop()}"
        return ",".join(f"{s}={a}" for s, a in self.choices)

    def __str__(self):
        return self.literal()


def check_policy(game: Game, policy: Policy) -> Policy:
    labels = {s for s, _ in policy.choices}
    for s in game.infosets:
        if s.label not in labels:
            raise ModelError("BAD_POLICY", f"policy assigns nothing to {s.label!r}")
        if policy[s.label] not in s.actions:
            raise ModelError("BAD_ACTION",
                             f"action {policy[s.label]!r} not available in {s.label!r}")
    extra = labels - set(game.infoset_labels)
    if extra:
        raise ModelError("UNKNOWN_LABEL", f"policy names unknown sets {sorted(extra)}")
    return policy


def uniform_policy(game: Game, action: str) -> Policy:
    """Play ``action`` everywhere; single-action sets keep their only action."""
    choice = {}
    for s in game.infosets:
        if action in s.actions:
            choice[s.label] = action
        elif len(s.actions) == 1:
            choice[s.label] = s.actions[0]
        else:
            raise ModelError("BAD_ACTION", f"action {action!r} not available in {s.label!r}")
    return Policy.from_mapping(choice)


def parse_policy(game: Game, text: str) -> Policy:
    """Parse ``all:<action>`` or ``<set>=<action>,<set>=<action>``.

    Sets left out of a per-set literal are filled in only when they offer a
    single action.
    """
    text = text.strip()
    if text.startswith("all:"):
        return uniform_policy(game, text[4:])
    choice = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        label, sep, action = part.partition("=")
        if not sep:
            raise ModelError("BAD_POLICY", f"expected <set>=<action>, got {part!r}")
        game.infoset(label)
        choice[label] = action
    for s in game.infosets:
        if s.label not in choice and len(s.actions) == 1:
            choice[s.label] = s.actions[0]
    return check_policy(game, Policy.from_mapping(choice))


def enumerate_policies(game: Game) -> list[Policy]:
    """All uniform pure policies, sets ordered by label, actions by declared position."""
    sets = sorted(game.infosets, key=lambda s: s.label)
    return [
        Policy(tuple(zip((s.label for s in sets), combo)))
        for combo in itertools.product(*(s.actions for s in sets))
    ]


def policy_count(game: Game) -> int:
    n = 1
    for s in game.infosets:
        n *= len(s.actions)
    return n


def make_spec(realizations: Iterable, infosets: Iterable, payoff: Callable[[str, Profile], object]
              ) -> GameSpec:
    """Build a spec whose table is filled by calling ``payoff(rid, profile)``.

    ``realizations`` holds ``(id, probability, awakenings)`` triples and
    ``infosets`` holds :class:`InformationSet` objects.
    """
    reals = tuple(Realization(rid, Fraction(p), tuple(aw)) for rid, p, aw in realizations)
    sets = tuple(infosets)
    by_label = {s.label: s for s in sets}
    table = {
        r.id: {prof: Fraction(payoff(r.id, prof))
               for prof in itertools.product(*(by_label[l].actions for l in r.awakenings))}
        for r in reals
    }
    return GameSpec(reals, sets, table)
