"""Built-in games.

Every game here is written out with its exact published numbers; payoff
rules stated in words ("pressed Right once") are expanded to full tables.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ModelError
from .game import Game, GameSpec, InformationSet, make_spec, validate

LR = ("Left", "Right")
HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def standard() -> GameSpec:
    """Heads: one awakening, Tails: two.  No real decision; one zero-payoff action."""
    return make_spec(
        [("Heads", HALF, ["I"]), ("Tails", HALF, ["I", "I"])],
        [InformationSet("I", ("wait",))],
        lambda r, prof: 0,
    )


def _shaw_payoff(r, prof):
    if r == "Heads":
        return 400 if prof[0] == "Left" else 200
    monday, rest = prof[0], prof[1:]
    if monday == "Left":
        return 200 if "Right" in rest else 100
    return 100 if "Left" in rest else 200


def shaw() -> GameSpec:
    """Fair coin; Heads wakes once, Tails four times, one information set."""
    return make_spec(
        [("Heads", HALF, ["I"]), ("Tails", HALF, ["I"] * 4)],
        [InformationSet("I", LR)],
        _shaw_payoff,
    )


_THREE = {0: 200, 1: 300, 2: 0, 3: 100}


def three_awakenings() -> GameSpec:
    return make_spec(
        [("Only", 1, ["I"] * 3)],
        [InformationSet("I", LR)],
        lambda r, prof: _THREE[prof.count("Right")],
    )


def three_awakenings_coin() -> GameSpec:
    """Heads (99%) plays Three Awakenings; Tails pays 100 per Left press."""
    def payoff(r, prof):
        if r == "Heads":
            return _THREE[prof.count("Right")]
        return 100 * prof.count("Left")

    return make_spec(
        [("Heads", Fraction(99, 100), ["I"] * 3), ("Tails", Fraction(1, 100), ["I"] * 3)],
        [InformationSet("I", LR)],
        payoff,
    )


def _counterexample(heads_left):
    def payoff(r, prof):
        if r == "Heads":
            return heads_left if prof[0] == "Left" else 0
        return 2 * prof.count("Right")

    return make_spec(
        [("Heads", HALF, ["I"]), ("Tails", HALF, ["I", "I"])],
        [InformationSet("I", LR)],
        payoff,
    )


def halfer_counterexample() -> GameSpec:
    """Per awakening: Heads pays 3 for Left, Tails pays 2 for Right."""
    return _counterexample(3)


def thirder_edt_counterexample() -> GameSpec:
    """As the halfer counterexample, but Left on Heads pays 5."""
    return _counterexample(5)


def _edge_payoff(r, prof):
    if r == "Edge":
        return 2 * prof.count("Right")
    return 3 if prof[0] == "Left" else 0


def three_sided_edt() -> GameSpec:
    """Three-sided coin; Heads wakes in I1, Tails in I2, Edge in I1 then I2."""
    return make_spec(
        [("Heads", THIRD, ["I1"]), ("Tails", THIRD, ["I2"]), ("Edge", THIRD, ["I1", "I2"])],
        [InformationSet("I1", LR, symmetry_class="I12"),
         InformationSet("I2", LR, symmetry_class="I12")],
        _edge_payoff,
    )


def three_sided_edt_i3() -> GameSpec:
    """The three-sided game plus an action-free I3 awakening on Heads and Tails."""
    return make_spec(
        [("Heads", THIRD, ["I1", "I3"]), ("Tails", THIRD, ["I2", "I3"]),
         ("Edge", THIRD, ["I1", "I2"])],
        [InformationSet("I1", LR, symmetry_class="I12"),
         InformationSet("I2", LR, symmetry_class="I12"),
         InformationSet("I3", ("wait",))],
        _edge_payoff,
    )


def halfer_dutch_book() -> GameSpec:
    """Two bets a CDT halfer accepts that together lose 1 whatever the coin does.

    A Sunday bet (one awakening in every realization) pays -9/2 on Heads and
    5 on Tails.  Each later awakening offers a bet paying 7/2 on Heads and -3
    on Tails.  Declining everything pays 0.
    """
    accept_decline = ("Accept", "Decline")
    sunday = {"Heads": Fraction(-9, 2), "Tails": Fraction(5)}
    awake = {"Heads": Fraction(7, 2), "Tails": Fraction(-3)}

    def payoff(r, prof):
        total = Fraction(0)
        for label, a in zip(["Sunday"] + ["Awake"] * (len(prof) - 1), prof):
            if a == "Accept":
                total += (sunday if label == "Sunday" else awake)[r]
        return total

    return make_spec(
        [("Heads", HALF, ["Sunday", "Awake"]), ("Tails", HALF, ["Sunday", "Awake", "Awake"])],
        [InformationSet("Sunday", accept_decline, decline_action="Decline"),
         InformationSet("Awake", accept_decline, decline_action="Decline")],
        payoff,
    )


BUILTINS = {
    "standard": standard,
    "shaw": shaw,
    "three-awakenings": three_awakenings,
    "three-awakenings-coin": three_awakenings_coin,
    "halfer-counterexample": halfer_counterexample,
    "three-sided-edt": three_sided_edt,
    "three-sided-edt-i3": three_sided_edt_i3,
    "thirder-edt-counterexample": thirder_edt_counterexample,
    "halfer-dutch-book": halfer_dutch_book,
}


def builtin_spec(name: str) -> GameSpec:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ModelError("UNKNOWN_BUILTIN",
                         f"no built-in game {name!r}; choose from {sorted(BUILTINS)}") from None


def builtin(name: str) -> Game:
    """A validated built-in game by name."""
    return validate(builtin_spec(name))
