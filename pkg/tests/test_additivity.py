import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from beautygames.additivity import (
    Decomposition,
    check_additive,
    decompose,
    equation_sides,
    reconstruct,
    verify_witness,
)
from beautygames.errors import NotAdditive
from beautygames.game import GameSpec, validate
from beautygames.generator import GeneratorParams, random_game
from beautygames.library import builtin

F = Fraction


def brute_force_additive(game):
    """The additivity equation over every realization, position and profile pair."""
    for r in game.realizations:
        profs = list(game.profiles(r.id))
        pay = lambda p: game.payoff(r.id, p)
        for i in range(r.n):
            for a, b in itertools.product(profs, profs):
                a_with_b = a[:i] + (b[i],) + a[i + 1:]
                b_with_a = b[:i] + (a[i],) + b[i + 1:]
                if pay(a) - pay(a_with_b) != pay(b_with_a) - pay(b):
                    return False
    return True


@pytest.mark.parametrize("name, additive", [
    ("standard", True),
    ("halfer-counterexample", True),
    ("thirder-edt-counterexample", True),
    ("three-sided-edt", True),
    ("three-sided-edt-i3", True),
    ("halfer-dutch-book", True),
    ("three-awakenings", False),
    ("three-awakenings-coin", False),
    ("shaw", False),
])
def test_builtin_verdicts(name, additive):
    g = builtin(name)
    for method in ("pruned", "exhaustive"):
        verdict = check_additive(g, method)
        assert verdict.additive is additive
        assert brute_force_additive(g) is additive
        if not additive:
            assert verify_witness(g, verdict.witness)


def test_three_awakenings_witness_is_coordination():
    w = check_additive(builtin("three-awakenings")).witness
    # deviating to Right pays +100 against all-Left context but not in the other
    assert w.lhs != w.rhs
    assert w.realization == "Only"


def test_shaw_derived_witness():
    # Tuesday L->R gains 100 with everything else Left, gains 0 when Wednesday already plays R
    g = builtin("shaw")
    L, R = "Left", "Right"
    lhs, rhs = equation_sides(g, "Tails", 2, (L, R, L, L), (L, L, R, L))
    assert (lhs, rhs) == (100, 0)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**63 - 1), st.booleans())
def test_scans_agree_with_brute_force(seed, additive):
    g = validate(random_game(GeneratorParams(seed=seed, additive=additive, max_actions=2)))
    expected = brute_force_additive(g)
    for method in ("pruned", "exhaustive"):
        verdict = check_additive(g, method)
        assert verdict.additive is expected
        if not expected:
            assert verify_witness(g, verdict.witness)


def test_halfer_counterexample_decomposition_left_defaults():
    g = builtin("halfer-counterexample")
    d = decompose(g)
    pi = {v.key: vals for v, vals in d.event_payoffs.items()}
    assert pi["Heads/1"] == {"Left": 0, "Right": -3}
    assert pi["Tails/1"] == pi["Tails/2"] == {"Left": 0, "Right": 2}
    assert d.constants == {"Heads": 3, "Tails": 0}


def test_halfer_counterexample_decomposition_right_defaults():
    g = builtin("halfer-counterexample")
    d = decompose(g, {v: "Right" for v in g.events})
    pi = {v.key: vals for v, vals in d.event_payoffs.items()}
    assert pi["Heads/1"] == {"Left": 3, "Right": 0}
    assert pi["Tails/1"] == pi["Tails/2"] == {"Left": -2, "Right": 0}
    assert d.constants == {"Heads": 0, "Tails": 4}


def test_decompose_refuses_non_additive():
    with pytest.raises(NotAdditive) as exc:
        decompose(builtin("three-awakenings"))
    assert exc.value.code == "NOT_ADDITIVE"
    assert verify_witness(builtin("three-awakenings"), exc.value.witness)


@pytest.mark.parametrize("name", ["halfer-counterexample", "three-sided-edt", "three-sided-edt-i3"])
def test_reconstruct_round_trip(name):
    g = builtin(name)
    assert reconstruct(decompose(g)) == g.spec.payoffs


def test_reconstruct_constant():
    g = builtin("three-sided-edt")
    zero = Decomposition({v: {a: F(0) for a in ("Left", "Right")} for v in g.events},
                         {r.id: F(7) for r in g.realizations},
                         {v: "Left" for v in g.events})
    table = reconstruct(zero)
    assert {x for t in table.values() for x in t.values()} == {7}
    assert set(table["Edge"]) == set(g.profiles("Edge"))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**63 - 1), st.data())
def test_decomposition_properties(seed, data):
    g = validate(random_game(GeneratorParams(seed=seed)))
    assert check_additive(g).additive
    first = decompose(g)
    other = {v: data.draw(st.sampled_from(g.infoset(v.infoset).actions)) for v in g.events}
    second = decompose(g, other)
    for d in (first, second):
        assert reconstruct(d) == g.spec.payoffs
        for v in g.events:
            assert d.event_payoffs[v][d.defaults[v]] == 0
    for v in g.events:
        acts = g.infoset(v.infoset).actions
        for a, b in itertools.product(acts, acts):
            assert (first.event_payoffs[v][a] - first.event_payoffs[v][b]
                    == second.event_payoffs[v][a] - second.event_payoffs[v][b])


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**63 - 1), st.data())
def test_perturbation_breaks_additivity(seed, data):
    g = validate(random_game(GeneratorParams(seed=seed)))
    multi = [r for r in g.realizations
             if r.n >= 2 and sum(1 for _ in g.profiles(r.id)) >= 4
             and all(len(g.infoset(l).actions) >= 2 for l in r.awakenings[:2])]
    if not multi:
        return
    r = data.draw(st.sampled_from(multi))
    prof = data.draw(st.sampled_from(list(g.profiles(r.id))))
    table = {k: dict(t) for k, t in g.spec.payoffs.items()}
    table[r.id][prof] += 1
    h = validate(GameSpec(g.realizations, g.infosets, table))
    verdict = check_additive(h)
    assert not verdict.additive
    assert verify_witness(h, verdict.witness)
    with pytest.raises(NotAdditive):
        decompose(h)
