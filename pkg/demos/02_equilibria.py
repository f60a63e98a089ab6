# Enumerating pure and strong equilibria of small instances.
from fractions import Fraction

from favgame import Instance, analyze, improving_coalition, makespan
from favgame.model import M1, M2

# Two unit jobs, one favoring each machine, at s = 3.
inst = Instance.from_pairs(3, [(1, 1), (1, 2)])
rep = analyze(inst)


def names(x):
    return " ".join(m.name for m in x)


print("opt:", rep.opt, names(rep.opt_allocation))
print("Nash:", [names(x) for x in rep.nash_allocations])
print("strong:", [names(x) for x in rep.strong_allocations])

# The swapped allocation is stable against single moves but the pair gains
# by swapping together.
swapped = (M2, M1)
print("makespan of swapped:", makespan(inst, swapped))
print("improving coalition:", improving_coalition(inst, swapped))
print("poa =", rep.poa, " spoa =", rep.spoa)

# A slightly bigger instance with mixed sizes
inst = Instance.from_pairs(Fraction(7, 4), [
    (Fraction(1, 2), 1), (Fraction(3, 4), 2), (Fraction(2, 3), 2), (Fraction(1, 5), 1), (1, 2),
])
rep = analyze(inst)
print(len(rep.nash_allocations), "Nash,", len(rep.strong_allocations), "strong")
print("poa =", rep.poa, "~", float(rep.poa))
print("spoa =", rep.spoa, "~", float(rep.spoa))
