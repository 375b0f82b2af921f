"""Perimeter contraction versus ordinary contraction on random finite spaces.

Every contraction contracts perimeters with a coefficient no larger than its
Lipschitz constant; the converse fails, and perimeter-contracting maps can
have two fixed points.
"""
from collections import Counter

import numpy as np

from triperi import classify
from triperi.random_spaces import random_finite_space, random_map

rng = np.random.default_rng(0)
rows = []
for _ in range(2000):
    n = int(rng.integers(3, 10))
    space = random_finite_space(rng, n, density=float(rng.uniform(0.2, 1.0)))
    r = classify(space, random_map(rng, space, int(rng.integers(1, 4))))
    rows.append((float(r.alpha_star), float(r.lipschitz), r.fixed_point_count, r.condition_i_holds))

alpha, lip, nfix, cond = map(np.array, zip(*rows))
pc = alpha < 1
print("perimeter contracting:", int(pc.sum()), " contractions:", int((lip < 1).sum()))
print("contraction => alpha* <= L:", bool(np.all(alpha[lip < 1] <= lip[lip < 1])))
print("fixed-point counts among perimeter-contracting maps:", dict(sorted(Counter(nfix[pc].tolist()).items())))
print("perimeter contracting, no fixed point, period-two point present:",
      int(np.sum(pc & (nfix == 0) & ~cond)))
print("perimeter contracting but L >= 1:", int(np.sum(pc & (lip >= 1))))
