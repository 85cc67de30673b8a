from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from beautygames.credence import custom, halfer, thirder
from beautygames.decision import (
    DecisionContext,
    Theory,
    action_values,
    best_response,
    cdt_value,
    edt_value,
    stable_policies,
)
from beautygames.errors import ModelError
from beautygames.game import (
    GameSpec,
    InformationSet,
    enumerate_policies,
    make_spec,
    parse_policy,
    validate,
)
from beautygames.generator import GeneratorParams, random_game
from beautygames.library import builtin

F = Fraction


def ctx(name, credence, theory, policy):
    g = builtin(name)
    c = credence(g) if callable(credence) else credence
    return DecisionContext(g, c, Theory(theory), parse_policy(g, policy))


@pytest.mark.parametrize("conj, left, right", [("all:Left", 160, 180), ("all:Right", 180, 200)])
def test_shaw_cdt(conj, left, right):
    c = ctx("shaw", thirder, "cdt", conj)
    assert cdt_value(c, "I", "Left") == left
    assert cdt_value(c, "I", "Right") == right
    assert best_response(c, "I") == ("Right",)


def test_three_awakenings_cdt():
    g = builtin("three-awakenings")
    uniform = custom(g, {v: 1 for v in g.events})
    c = DecisionContext(g, uniform, Theory.CDT, parse_policy(g, "all:Right"))
    assert cdt_value(c, "I", "Right") == 100
    assert cdt_value(c, "I", "Left") == 0


def test_halfer_counterexample_cdt():
    # under the self-conjecture all-Left the values are the per-round 3/2 vs 1
    c = ctx("halfer-counterexample", halfer, "cdt", "all:Left")
    assert action_values(c, "I") == {"Left": F(3, 2), "Right": F(1)}
    assert best_response(c, "I") == ("Left",)
    # other conjecture: values shift by the same constant, argmax unchanged
    c = ctx("halfer-counterexample", halfer, "cdt", "all:Right")
    values = action_values(c, "I")
    assert values["Left"] - values["Right"] == F(1, 2)
    assert best_response(c, "I") == ("Left",)


def test_thirder_counterexample_cdt_derived():
    c = ctx("halfer-counterexample", thirder, "cdt", "all:Right")
    assert action_values(c, "I") == {"Left": F(7, 3), "Right": F(8, 3)}


def test_edt_three_sided():
    c = ctx("three-sided-edt", halfer, "edt", "all:Left")
    assert edt_value(c, "I1", "Left") == F(3, 2)
    assert edt_value(c, "I1", "Right") == 2
    assert best_response(c, "I1") == ("Right",)


def test_edt_thirder_counterexample():
    c = ctx("thirder-edt-counterexample", thirder, "edt", "all:Left")
    assert edt_value(c, "I", "Left") == F(5, 3)
    assert edt_value(c, "I", "Right") == F(8, 3)


def test_edt_halfer_counterexample_derived():
    c = ctx("halfer-counterexample", halfer, "edt", "all:Left")
    assert edt_value(c, "I", "Left") == F(3, 2)
    assert edt_value(c, "I", "Right") == 2


def test_edt_scope_mismatch():
    g = validate(make_spec(
        [("Heads", F(1, 2), ["I1"]), ("Tails", F(1, 2), ["I2"])],
        [InformationSet("I1", ("Left", "Right"), "S"), InformationSet("I2", ("Left", "Up"), "S")],
        lambda r, prof: 1 if prof[0] == "Left" else 0,
    ))
    c = DecisionContext(g, halfer(g), Theory.EDT, parse_policy(g, "I1=Left,I2=Left"))
    assert edt_value(c, "I1", "Left") == 1
    with pytest.raises(ModelError) as exc:
        edt_value(c, "I1", "Right")
    assert exc.value.code == "SCOPE_ACTION_MISMATCH"


def test_bad_action_and_label():
    c = ctx("shaw", thirder, "cdt", "all:Left")
    with pytest.raises(ModelError) as exc:
        cdt_value(c, "I", "Up")
    assert exc.value.code == "BAD_ACTION"
    with pytest.raises(ModelError) as exc:
        cdt_value(c, "J", "Left")
    assert exc.value.code == "UNKNOWN_LABEL"


def test_zero_payoffs_tie():
    c = ctx("standard", thirder, "cdt", "all:wait")
    assert best_response(c, "I") == ("wait",)
    g = builtin("halfer-counterexample")
    zero = validate(GameSpec(g.realizations, g.infosets,
                             {r: {p: 0 for p in t} for r, t in g.spec.payoffs.items()}))
    c = DecisionContext(zero, thirder(zero), Theory.CDT, parse_policy(zero, "all:Left"))
    assert best_response(c, "I") == ("Left", "Right")
    assert len(stable_policies(zero, "thirder", "cdt")) == 2


@pytest.mark.parametrize("rule", ["thirder", "halfer"])
def test_three_awakenings_stable(rule):
    assert [str(p) for p in stable_policies(builtin("three-awakenings"), rule, "cdt")] == ["all:Right"]


def test_coin_variant_stable():
    g = builtin("three-awakenings-coin")
    assert [str(p) for p in stable_policies(g, "thirder", "cdt")] == ["all:Right"]
    inverted = custom(g, {v: F(1, 100) if v.realization == "Heads" else F(99, 100)
                          for v in g.events})
    assert [str(p) for p in stable_policies(g, inverted, "cdt")] == ["all:Left"]


def test_three_sided_edt_stable():
    pols = stable_policies(builtin("three-sided-edt"), "halfer", "edt")
    assert [p.as_dict() for p in pols] == [{"I1": "Right", "I2": "Right"}]


def _additive_games():
    return st.builds(lambda s: validate(random_game(GeneratorParams(seed=s))),
                     st.integers(0, 2**63 - 1))


@settings(max_examples=100, deadline=None)
@given(_additive_games())
def test_cdt_argmax_conjecture_free_in_additive_games(g):
    c = thirder(g)
    pols = enumerate_policies(g)
    for s in g.infosets:
        answers = {best_response(DecisionContext(g, c, Theory.CDT, p), s.label) for p in pols}
        assert len(answers) == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**63 - 1), st.sampled_from(["thirder", "halfer"]),
       st.sampled_from(["cdt", "edt"]))
def test_stable_policies_attain_max(seed, rule, theory):
    g = validate(random_game(GeneratorParams(seed=seed, additive=False)))
    c = thirder(g) if rule == "thirder" else halfer(g)
    for p in stable_policies(g, c, theory):
        k = DecisionContext(g, c, Theory(theory), p)
        for s in g.infosets:
            values = action_values(k, s.label)
            assert values[p[s.label]] == max(values.values())


def _transform(g, shift, scale):
    table = {r: {p: scale * x + shift.get(r, 0) for p, x in t.items()}
             for r, t in g.spec.payoffs.items()}
    return validate(GameSpec(g.realizations, g.infosets, table))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**63 - 1), st.fractions(min_value=F(1, 10), max_value=10),
       st.fractions(-10, 10))
def test_best_response_invariance(seed, scale, shift):
    g = validate(random_game(GeneratorParams(seed=seed, additive=False)))
    h = _transform(g, {g.realizations[0].id: shift}, scale)
    for p in enumerate_policies(g)[:4]:
        a = DecisionContext(g, thirder(g), Theory.CDT, p)
        b = DecisionContext(h, thirder(h), Theory.CDT, p)
        for s in g.infosets:
            assert best_response(a, s.label) == best_response(b, s.label)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**63 - 1))
def test_edt_equals_cdt_on_single_awakening_games(seed):
    params = GeneratorParams(seed=seed, additive=False, max_awakenings=1)
    g = validate(random_game(params))
    c = halfer(g)
    for p in enumerate_policies(g):
        a = DecisionContext(g, c, Theory.CDT, p)
        b = DecisionContext(g, c, Theory.EDT, p)
        for s in g.infosets:
            assert action_values(a, s.label) == action_values(b, s.label)
