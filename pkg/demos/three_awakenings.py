# One realization, three identical awakenings. Credence carries no
# information here, so the gap between stable play and the optimum is
# purely a coordination failure.

from beautygames import builtin, halfer, parse_policy, thirder
from beautygames.additivity import check_additive
from beautygames.analysis import brute_force_optimum, ex_ante
from beautygames.decision import Theory, stable_policies

game = builtin("three-awakenings")

for rule in (thirder, halfer):
    print(rule.__name__, [str(p) for p in stable_policies(game, rule(game), Theory.CDT)])

print("all:Right", ex_ante(game, parse_policy(game, "all:Right")))
best, policies = brute_force_optimum(game)
print("optimum", best, [str(p) for p in policies])

# The payoff depends on how many awakenings pick Right, not on each pick
# separately. The additivity scan finds a concrete pair of profiles.
verdict = check_additive(game)
print("additive:", verdict.additive)
print("witness:", verdict.witness)

# With a 99/100 coin in front, thirder and halfer agree on Heads ...
coin = builtin("three-awakenings-coin")
print("P(Heads|I) =", thirder(coin).of_realization("I", "Heads"))
print("stable:", [str(p) for p in stable_policies(coin, "thirder", Theory.CDT)])
for pol in ("all:Left", "all:Right"):
    print(pol, ex_ante(coin, parse_policy(coin, pol)))
