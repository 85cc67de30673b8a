# When payoffs add up across awakenings, thirder credences with causal
# reasoning always land on an ex ante optimal plan. The games below show
# what breaks when either ingredient is swapped.

from beautygames import builtin
from beautygames.analysis import check_proposition

cases = [
    ("halfer-counterexample", "thirder", "cdt"),
    ("halfer-counterexample", "halfer", "cdt"),
    ("three-sided-edt", "halfer", "edt"),
    ("thirder-edt-counterexample", "thirder", "edt"),
]

for name, rule, theory in cases:
    res = check_proposition(builtin(name), rule, theory)
    stable = ", ".join(f"{p} = {v}" for p, v in res.stable)
    print(f"{name:28s} {rule:7s} {theory}  {res.verdict.value:9s} stable: {stable}; optimum {res.optimum}")
