# Upper bounds by linear programming over the equilibrium conditions.
from fractions import Fraction

from favgame import max_l1, poa_formula, spoa_formula
from favgame.lpverify import best_branch, build_system, dual_weights

s = Fraction(17, 10)

# Maximising the heavier load over every branch reproduces both closed forms.
for mode, formula in (("se", spoa_formula), ("ne", poa_formula)):
    value = max_l1(s, mode)
    print(f"{mode}: max l1 = {value} (~{float(value):.6f}), closed form {formula(s)}")

# Which branch attains it, and what does the optimal point look like?
best = best_branch(s, "se")
print("best branch:", best.branch.describe())
for name, v in best.result.value_of(build_system(s, "se", best.branch).names).items():
    print(f"  {name} = {v}")

# Dual multipliers give the weighted sum of constraints behind the bound.
rep = dual_weights(s, "se", best.branch)
for label, w in rep.weights.items():
    if w:
        print(f"  {w} x {label}")
print("bound from duals:", rep.bound)
