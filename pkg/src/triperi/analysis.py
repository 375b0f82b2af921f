"""Perimeter-contraction and Lipschitz coefficients, classification, continuity."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .mapping import SelfMap, apply, find_period_two_violation, fixed_points
from .metric import DistanceTable, MetricSpace, PointRef, Triple
from .numeric import Scalar, checked

THREADS_ENV = "TRIPERI_THREADS"


class AlphaZeroError(ValueError):
    """``delta = eps / (4 alpha)`` is undefined for ``alpha = 0``."""


def worker_count() -> int:
    """Parallelism cap from ``TRIPERI_THREADS`` (default 1)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def perimeter_ratio(space: MetricSpace, map: SelfMap, t: Triple) -> Scalar:
    """Image perimeter over preimage perimeter for a pairwise distinct triple."""
    a, b, c = t
    ta, tb, tc = apply(map, a), apply(map, b), apply(map, c)
    d = space.distance
    num = d(ta, tb) + d(tb, tc) + d(ta, tc)
    den = d(a, b) + d(b, c) + d(a, c)
    return checked(num / den)


class _Enumeration:
    """Window points, their images and one distance table covering both."""

    def __init__(self, space: MetricSpace, map: SelfMap, window: Optional[int]) -> None:
        self.space = space
        self.points = space.points(window)
        self.images = [apply(map, p) for p in self.points]
        extra = sorted(set(self.images) - set(self.points))
        self.table = DistanceTable(space, self.points + extra)
        idx = self.table.index
        self.img = [idx[q] for q in self.images]
        self.exact = space.exact
        self.atol = space.tolerance.atol


def _greater(num, den, best_num, best_den, exact, atol) -> bool:
    if best_num is None:
        return True
    if exact:
        return num * best_den > best_num * den
    return num / den > best_num / best_den + atol


def _triple_max(en: _Enumeration, firsts: range):
    d = en.table.ints
    img = en.img
    n = len(en.points)
    best_num = best_den = best = None
    for i in firsts:
        di, ti = d[i], img[i]
        dti = d[ti]
        for j in range(i + 1, n):
            dij = di[j]
            dj, tj = d[j], img[j]
            tij = dti[tj]
            for k in range(j + 1, n):
                tk = img[k]
                den = dij + dj[k] + di[k]
                num = tij + d[tj][tk] + dti[tk]
                if _greater(num, den, best_num, best_den, en.exact, en.atol):
                    best_num, best_den, best = num, den, (i, j, k)
    return best_num, best_den, best


def _reduce(parts, exact, atol):
    best = (None, None, None)
    for num, den, w in parts:
        if w is not None and _greater(num, den, best[0], best[1], exact, atol):
            best = (num, den, w)
    return best


def _chunks(n: int, workers: int) -> list[range]:
    if workers <= 1 or n < 2 * workers:
        return [range(n)]
    step = -(-n // (4 * workers))
    return [range(s, min(s + step, n)) for s in range(0, n, step)]


def _run(fn, en: _Enumeration, workers: Optional[int]):
    workers = worker_count() if workers is None else workers
    chunks = _chunks(len(en.points), workers)
    if len(chunks) == 1:
        return fn(en, chunks[0])
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda r: fn(en, r), chunks))
    # chunks are in lexicographic order, so strict improvement keeps the first witness
    return _reduce(parts, en.exact, en.atol)


def _as_scalar(num, den, exact) -> Scalar:
    if exact:
        return checked(Fraction(num, den))
    return checked(num / den)


def perimeter_contraction_coefficient(
    space: MetricSpace,
    map: SelfMap,
    window: Optional[int] = None,
    workers: Optional[int] = None,
) -> tuple[Scalar, Triple]:
    """Maximum perimeter ratio over all pairwise distinct triples in the window.

    Returns the attained maximum and the lexicographically smallest triple
    attaining it.  The map contracts perimeters on the window with every
    coefficient at least this value; on an infinite space that says nothing
    beyond the window.
    """
    en = _Enumeration(space, map, window)
    if len(en.points) < 3:
        raise ValueError(f"need at least 3 points, have {len(en.points)}")
    num, den, (i, j, k) = _run(_triple_max, en, workers)
    pts = en.points
    return _as_scalar(num, den, en.exact), Triple(pts[i], pts[j], pts[k])


def _pair_max(en: _Enumeration, firsts: range):
    d = en.table.ints
    img = en.img
    n = len(en.points)
    best_num = best_den = best = None
    for i in firsts:
        dti = d[img[i]]
        for j in range(i + 1, n):
            num, den = dti[img[j]], d[i][j]
            if _greater(num, den, best_num, best_den, en.exact, en.atol):
                best_num, best_den, best = num, den, (i, j)
    return best_num, best_den, best


def lipschitz_coefficient(
    space: MetricSpace,
    map: SelfMap,
    window: Optional[int] = None,
    workers: Optional[int] = None,
) -> tuple[Scalar, tuple[PointRef, PointRef]]:
    """Maximum of ``d(Tp, Tq) / d(p, q)`` over distinct pairs, with witness."""
    en = _Enumeration(space, map, window)
    if len(en.points) < 2:
        raise ValueError(f"need at least 2 points, have {len(en.points)}")
    num, den, (i, j) = _run(_pair_max, en, workers)
    return _as_scalar(num, den, en.exact), (en.points[i], en.points[j])


@dataclass(frozen=True)
class AnalysisReport:
    alpha_star: Scalar
    alpha_witness: Triple
    lipschitz: Scalar
    lipschitz_witness: tuple[PointRef, PointRef]
    is_perimeter_contracting: bool
    is_contraction: bool
    condition_i_witness: Optional[PointRef]
    fixed_points: tuple[PointRef, ...]
    window: Optional[int]
    points_checked: int = field(default=0)

    @property
    def fixed_point_count(self) -> int:
        return len(self.fixed_points)

    @property
    def condition_i_holds(self) -> bool:
        return self.condition_i_witness is None


def classify(
    space: MetricSpace,
    map: SelfMap,
    window: Optional[int] = None,
    workers: Optional[int] = None,
) -> AnalysisReport:
    alpha, alpha_w = perimeter_contraction_coefficient(space, map, window, workers)
    lip, lip_w = lipschitz_coefficient(space, map, window, workers)
    fixed = set(fixed_points(map, window)) | set(map.declared_fixed_points())
    return AnalysisReport(
        alpha_star=alpha,
        alpha_witness=alpha_w,
        lipschitz=lip,
        lipschitz_witness=lip_w,
        is_perimeter_contracting=alpha < 1,
        is_contraction=lip < 1,
        condition_i_witness=find_period_two_violation(map, window),
        fixed_points=tuple(sorted(fixed)),
        window=window,
        points_checked=len(space.points(window)),
    )


@dataclass(frozen=True)
class ContinuityResult:
    passed: bool
    delta: Optional[Scalar]
    witness: Optional[PointRef] = None
    checked: int = 0


def continuity_modulus_check(
    space: MetricSpace,
    map: SelfMap,
    x0: PointRef,
    eps: Scalar,
    alpha: Scalar,
    window: Optional[int] = None,
) -> ContinuityResult:
    """Check ``d(Tx0, Tx) < eps`` whenever ``d(x0, x) < eps / (4 alpha)``.

    Only points ``x != x0`` for which a third distinct window point exists
    are considered.  The caller certifies that the map contracts perimeters
    with ``alpha`` on the window.  ``alpha = 0`` passes trivially when all
    window images coincide and raises :class:`AlphaZeroError` otherwise.
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if alpha < 0 or alpha >= 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    space.require(x0)
    pts = space.points(window)
    if alpha == 0:
        if len({apply(map, p) for p in pts}) <= 1:
            return ContinuityResult(True, None, None, 0)
        raise AlphaZeroError("alpha = 0 leaves delta = eps / (4 alpha) undefined")
    delta = checked(eps / (4 * alpha))
    tx0 = apply(map, x0)
    n_checked = 0
    if len(set(pts) | {x0}) < 3:
        return ContinuityResult(True, delta, None, 0)
    for x in pts:
        if x == x0 or not space.distance(x0, x) < delta:
            continue
        n_checked += 1
        if not space.distance(tx0, apply(map, x)) < eps:
            return ContinuityResult(False, delta, x, n_checked)
    return ContinuityResult(True, delta, None, n_checked)
