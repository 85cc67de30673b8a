# Repeating the experiment many times: what fraction of awakenings
# happen after Heads? Counts are exact, so frequencies are exact ratios.

from beautygames import builtin, thirder
from beautygames.montecarlo import monte_carlo
from beautygames.rational import decimal

game = builtin("standard")
for trials in (100, 10_000, 100_000):
    freq = monte_carlo(game, trials, seed=7).realization_frequencies()["I"]["Heads"]
    print(trials, freq, decimal(freq))

print("thirder:", thirder(game).of_realization("I", "Heads"))

# Same idea with four awakenings on Tails.
shaw = builtin("shaw")
res = monte_carlo(shaw, 100_000, seed=7)
for event, f in res.frequencies()["I"].items():
    print(event.key, decimal(f))
