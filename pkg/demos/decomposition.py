# Additive payoffs split into one term per awakening plus a constant per
# realization. The split depends on which action counts as the baseline,
# but differences between actions do not.

from beautygames import builtin
from beautygames.additivity import decompose, reconstruct
from beautygames.generator import GeneratorParams, random_game
from beautygames.game import validate

game = builtin("halfer-counterexample")
for baseline in ("Left", "Right"):
    d = decompose(game, {v: baseline for v in game.events})
    print("baseline", baseline)
    for v, vals in d.event_payoffs.items():
        print("  ", v.key, {a: str(x) for a, x in vals.items()})
    print("   constants", {r: str(c) for r, c in d.constants.items()})
    assert reconstruct(d) == game.spec.payoffs

# Random additive games round-trip the same way.
g = validate(random_game(GeneratorParams(seed=3)))
print(len(g.events), "events;", reconstruct(decompose(g)) == g.spec.payoffs)
