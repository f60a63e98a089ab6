# Closed-form anarchy ratios for two machines with favorite-machine slowdown s.
import numpy as np
from fractions import Fraction

from favgame import compute_breakpoints, poa_formula, spoa_formula, spoa_simple
from favgame.bounds import PHI, SPOA_PIECES, segment_of

# Exact inputs give exact outputs.
for s in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)):
    print(f"s={s}: poa={poa_formula(s)}  spoa={spoa_formula(s)}  piece={segment_of(s)}")

# The strong ratio is piecewise; the seven pieces meet at these points.
bps = compute_breakpoints()
for i, b in enumerate(bps.as_tuple(), start=1):
    print(f"s{i} = {float(b):.6f}")

# Sweep a float grid. The peak of the strong ratio sits at the golden ratio.
grid = np.linspace(1, 4, 301)
spoa = np.array([spoa_formula(s) for s in grid])
poa = np.array([poa_formula(s) for s in grid])
print("max spoa on grid:", spoa.max(), "at s =", grid[spoa.argmax()])
print("spoa at phi:", spoa_formula(PHI), "phi:", PHI)

# The simple bound (s+1)/s is never beaten, and the gap to poa widens with s.
print("worst slack to (s+1)/s:", min(spoa_simple(s) - v for s, v in zip(grid, spoa)))
print("poa - spoa at s=4:", poa[-1] - spoa[-1])

# Piece labels, for reference
for p in SPOA_PIECES:
    print(p.index, p.label)
