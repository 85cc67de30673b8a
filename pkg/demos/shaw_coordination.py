# Four-awakening Tails betting game: a per-awakening best response
# that leaves money on the table.

from beautygames import builtin, parse_policy, thirder
from beautygames.analysis import brute_force_optimum, ex_ante
from beautygames.decision import DecisionContext, Theory, action_values, stable_policies

game = builtin("shaw")
cred = thirder(game)

# Heads wakes once, Tails wakes three times; every awakening sees the same set "I".
for r in game.realizations:
    print(r.id, r.probability, r.awakenings)

# Per-awakening values against each uniform conjecture.
for conj in ("all:Left", "all:Right"):
    ctx = DecisionContext(game, cred, Theory.CDT, parse_policy(game, conj))
    print(conj, {a: str(v) for a, v in action_values(ctx, "I").items()})

# Right is better whatever the other awakenings do, so all-Right is the only
# self-consistent plan ...
stable = stable_policies(game, cred, Theory.CDT)
print("stable:", [str(p) for p in stable], "worth", ex_ante(game, stable[0]))

# ... yet committing to Left everywhere is worth more.
best, policies = brute_force_optimum(game)
print("optimum:", best, [str(p) for p in policies])
