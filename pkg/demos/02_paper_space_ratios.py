"""The countable shift space and its perimeter ratios.

Points x_0, x_1, ... sit on a line with gaps a, a, a/2, a/2, a/4, ... and
accumulate at x*.  The shift x_i -> x_{i+1} keeps every other gap, so it is
not a contraction, yet every triangle loses at least 1/8 of its perimeter.
"""
from fractions import Fraction

import numpy as np

from triperi import (
    PAPER_ALPHA,
    PaperSpaceParams,
    finite_triple_ratio,
    lipschitz_coefficient,
    make_paper_space,
    perimeter_contraction_coefficient,
    prefix_distance,
    star_triple_ratio,
    step_distance,
)

params = PaperSpaceParams(scale=Fraction(1), window=64)
space, shift = make_paper_space(params)

print("gaps d(x_i, x_i+1):", [str(step_distance(i, params)) for i in range(8)])
print("d(x_0, x_i):       ", [str(prefix_distance(i, params)) for i in range(8)])

# %% triangles with a vertex at x*: ratio depends only on the parity of i
print("star ratios:", [str(star_triple_ratio(i, params)) for i in range(8)])

# %% triangles inside the sequence: the ratio does not depend on the middle index
N = 24
R = np.full((N, N), np.nan)
for i in range(N):
    for k in range(i + 2, N):
        R[i, k] = float(finite_triple_ratio(i, i + 1, k, params))
i_max, k_max = (int(v) for v in np.unravel_index(np.nanargmax(R), R.shape))
print(f"largest x_i, x_j, x_k ratio for k < {N}: {np.nanmax(R):.4f} at i={i_max}, k={k_max}")
print("row i = 0:", np.round(R[0, 2:10], 4))

# %% brute force over every triangle in the window, exactly
alpha, witness = perimeter_contraction_coefficient(space, shift)
lip, pair = lipschitz_coefficient(space, shift)
print(f"window {params.window}: max ratio {alpha} at {[space.name(p) for p in witness]}, bound {PAPER_ALPHA}")
print(f"lipschitz {lip} at {[space.name(p) for p in pair]}")
