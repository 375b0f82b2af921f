"""The three-point examples and the countable shift space ``{x_0, x_1, ...} U {x*}``.

In the countable space consecutive points ``x_i, x_{i+1}`` are
``a / 2**(i // 2)`` apart (steps ``a, a, a/2, a/2, a/4, ...``), points lie on
a line in index order, and ``x*`` is the limit at distance ``4a`` from
``x_0``.  The shift ``x_i -> x_{i+1}``, ``x* -> x*`` contracts perimeters of
triangles with coefficient ``7/8`` but is not a contraction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .mapping import RuleMap, TableMap
from .metric import (
    MAX_EXACT_WINDOW,
    STAR,
    ComputableSpace,
    FiniteSpace,
    PointRef,
)
from .numeric import CapacityError, Scalar, checked

#: The coefficient proved for the shift map on the whole space.
PAPER_ALPHA = Fraction(7, 8)
DEFAULT_WINDOW = 64


@dataclass(frozen=True)
class PaperSpaceParams:
    """Scale ``a > 0`` and enumeration window ``N`` (indices ``0..N`` plus ``x*``)."""

    scale: Scalar = Fraction(1)
    window: int = DEFAULT_WINDOW
    exact: bool = True

    def __post_init__(self) -> None:
        scale = Fraction(self.scale) if self.exact else float(self.scale)
        object.__setattr__(self, "scale", checked(scale))
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if self.window < 3:
            raise ValueError(f"window must be >= 3, got {self.window}")
        if self.exact and self.window > MAX_EXACT_WINDOW:
            raise CapacityError(f"window {self.window} exceeds exact-mode limit {MAX_EXACT_WINDOW}")


def _index(i: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or i < 0:
        raise ValueError(f"index must be a non-negative int, got {i!r}")
    return i


def _halvings(n: int, params: PaperSpaceParams) -> Scalar:
    # a / 2**n
    if params.exact:
        return checked(params.scale / (1 << n))
    return params.scale / 2.0**n


def step_distance(i: int, params: PaperSpaceParams = PaperSpaceParams()) -> Scalar:
    """``d(x_i, x_{i+1}) = a / 2**floor(i/2)``."""
    return _halvings(_index(i) // 2, params)


def prefix_distance(i: int, params: PaperSpaceParams = PaperSpaceParams()) -> Scalar:
    """``d(x_0, x_i)`` in closed form.

    ``4a(1 - 2**-n)`` for ``i = 2n`` and ``4a(1 - 2**-n) - a / 2**(n-1)`` for
    ``i = 2n - 1``.
    """
    i = _index(i)
    a = params.scale
    n = (i + 1) // 2
    even_part = 4 * a - 4 * _halvings(n, params)
    if i % 2 == 0:
        return checked(even_part)
    return checked(even_part - _halvings(n - 1, params))


def star_distance(i: int, params: PaperSpaceParams = PaperSpaceParams()) -> Scalar:
    """``d(x_i, x*) = 4a - d(x_0, x_i)``."""
    return checked(4 * params.scale - prefix_distance(i, params))


class PaperSpace(ComputableSpace):
    """The countable space; distances in closed form, no materialized matrix."""

    def __init__(self, params: PaperSpaceParams = PaperSpaceParams()) -> None:
        self.params = params
        self.exact = params.exact
        self.default_window = params.window

    def __repr__(self) -> str:
        return f"PaperSpace(scale={self.params.scale}, window={self.params.window})"

    def _distance(self, p: PointRef, q: PointRef) -> Scalar:
        if p is STAR:
            return star_distance(q, self.params)
        if q is STAR:
            return star_distance(p, self.params)
        i, j = min(p, q), max(p, q)
        return prefix_distance(j, self.params) - prefix_distance(i, self.params)


def shift_map(space: PaperSpace) -> RuleMap:
    """``x_i -> x_{i+1}``, ``x* -> x*``."""

    def rule(p: PointRef) -> PointRef:
        return STAR if p is STAR else p + 1

    return RuleMap(space, rule, fixed=(STAR,))


def make_paper_space(params: PaperSpaceParams = PaperSpaceParams()) -> tuple[PaperSpace, RuleMap]:
    space = PaperSpace(params)
    return space, shift_map(space)


def star_triple_ratio(i: int, params: PaperSpaceParams = PaperSpaceParams()) -> Scalar:
    """Perimeter ratio of ``(x_i, x_j, x*)`` for any ``j > i``.

    Every such triangle is degenerate with perimeter ``2 d(x_i, x*)``, so the
    ratio is ``(8a - 2 d(x_0, x_{i+1})) / (8a - 2 d(x_0, x_i))``: ``3/4`` for
    even ``i`` and ``2/3`` for odd ``i``.
    """
    a8 = 8 * params.scale
    return checked((a8 - 2 * prefix_distance(i + 1, params)) / (a8 - 2 * prefix_distance(i, params)))


def finite_triple_ratio(i: int, j: int, k: int, params: PaperSpaceParams = PaperSpaceParams()) -> Scalar:
    """Perimeter ratio of ``(x_i, x_j, x_k)``, ``i < j < k``, by closed form.

    ``1 - 2 (step(i) - step(k)) / P`` where ``P = 2 d(x_i, x_k)`` is the
    perimeter; the middle index only has to exist.
    """
    for v in (i, j, k):
        _index(v)
    if not i < j < k:
        raise ValueError(f"indices must be strictly increasing, got ({i}, {j}, {k})")
    perim = 2 * (prefix_distance(k, params) - prefix_distance(i, params))
    drop = 2 * (step_distance(i, params) - step_distance(k, params))
    return checked(1 - drop / perim)


_EQUILATERAL = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def make_three_point_example(variant: Literal["A", "B"]) -> tuple[FiniteSpace, TableMap]:
    """Equilateral unit space ``{x, y, z}`` with one of two maps.

    ``A``: ``x -> x, y -> y, z -> x`` (two fixed points).
    ``B``: ``x -> y, y -> x, z -> x`` (no fixed point; ``x`` has period two).
    """
    space = FiniteSpace(["x", "y", "z"], _EQUILATERAL)
    if variant == "A":
        pairs = {"x": "x", "y": "y", "z": "x"}
    elif variant == "B":
        pairs = {"x": "y", "y": "x", "z": "x"}
    else:
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    return space, TableMap.from_names(space, pairs)
