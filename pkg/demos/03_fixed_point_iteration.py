"""Successive approximations on the shift space, with a priori bounds.

The gap d(x_n, x_n+1) halves every second step while the perimeters p_n of
consecutive triangles shrink by 3/4 and 2/3 in turn.  The bound
alpha^(n-1) p_0 / (1 - alpha) controls every later distance.
"""
from fractions import Fraction

import numpy as np

from triperi import (
    PAPER_ALPHA,
    STAR,
    make_paper_space,
    orbit,
    perimeter_sequence,
    picard_solve,
)

space, shift = make_paper_space()

res = picard_solve(space, shift, 0, PAPER_ALPHA, tol=Fraction(1, 10**6), max_iter=500)
print(res.status.value, "at", space.name(res.point), "after", res.iterations, "steps")
print("final gap:", res.final_gap, " p0:", res.p0)

true_err = np.array([float(space.distance(n, STAR)) for n in range(1, res.iterations + 1)])
bounds = np.array([float(b) for b in res.bound_trace])
print("n   d(x_n, x*)     bound")
for n in (1, 5, 10, 20, 40):
    print(f"{n:<3} {true_err[n - 1]:.3e}    {bounds[n - 1]:.3e}")
print("bound holds everywhere:", bool(np.all(true_err <= bounds)))

# %% perimeter ratios alternate between 3/4 and 2/3
p = perimeter_sequence(space, shift, 0, 8)
print("p_n:", [str(v) for v in p])
print("p_n+1 / p_n:", [str(b / a) for a, b in zip(p, p[1:])])

# %% the same orbit as a trace
print(orbit(shift, 0, 5))
