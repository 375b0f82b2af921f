"""Random finite metric spaces and self-maps for property checks."""
from __future__ import annotations

from typing import Optional

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .mapping import TableMap
from .metric import FiniteSpace


def random_finite_space(
    rng: np.random.Generator,
    n: int,
    max_weight: int = 20,
    exact: bool = True,
    density: float = 1.0,
) -> FiniteSpace:
    """Shortest-path completion of a random connected weighted graph.

    Integer edge weights in ``[1, max_weight]`` on a random spanning path
    plus extra edges kept with probability ``density``; the result is a
    metric with integer distances.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    w = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    weights = rng.integers(1, max_weight + 1, size=len(iu[0])).astype(float)
    keep = rng.random(len(iu[0])) < density
    w[iu] = np.where(keep, weights, 0.0)
    order = rng.permutation(n)
    for a, b in zip(order[:-1], order[1:]):
        if w[min(a, b), max(a, b)] == 0:
            w[min(a, b), max(a, b)] = rng.integers(1, max_weight + 1)
    w = w + w.T
    d = shortest_path(w, method="FW", directed=False)
    names = [f"p{i}" for i in range(n)]
    if exact:
        return FiniteSpace(names, [[int(v) for v in row] for row in d], exact=True)
    return FiniteSpace(names, d, exact=False)


def random_map(
    rng: np.random.Generator,
    space: FiniteSpace,
    image_size: Optional[int] = None,
) -> TableMap:
    """Random self-map whose image has at most ``image_size`` points."""
    n = len(space)
    if image_size is None:
        image_size = int(rng.integers(1, n + 1))
    targets = rng.choice(n, size=min(image_size, n), replace=False)
    return TableMap(space, [int(t) for t in rng.choice(targets, size=n)])
