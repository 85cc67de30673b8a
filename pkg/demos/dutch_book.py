# A bettor offers a bet on Sunday and one more at every awakening. Each
# offer can be declined for a payoff of zero.

from beautygames import builtin
from beautygames.analysis import dutch_book_verdict, sure_loss

game = builtin("halfer-dutch-book")

for rule in ("halfer", "thirder"):
    res = dutch_book_verdict(game, rule, "cdt")
    print(rule, res.verdict.value, res.policy)

# The halfer's self-consistent plan accepts everything and loses in both realizations.
res = dutch_book_verdict(game, "halfer", "cdt")
for r in game.realizations:
    print(r.id, game.payoff(r.id, game.play(r.id, res.policy)))
print(sure_loss(game, res.policy))
