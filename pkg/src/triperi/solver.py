"""Successive approximations with a priori error bounds from orbit perimeters."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .mapping import SelfMap, apply, orbit
from .metric import MetricSpace, PointRef, Triple, perimeter
from .numeric import Scalar, checked, is_exact, le


class SolveStatus(str, enum.Enum):
    CONVERGED = "converged"
    REACHED_EXACT_FIXED_POINT = "reached-exact-fixed-point"
    STALLED_BUDGET = "stalled-budget"
    CONDITION_I_VIOLATION = "condition-i-violation-detected"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of :func:`picard_solve`.

    ``point`` is the last iterate ``x_n`` with ``n = iterations``, and
    ``final_gap`` is ``d(x_n, x_{n+1})``.  ``bound_trace[k - 1]`` is the a
    priori bound ``alpha**(k-1) p0 / (1 - alpha)`` on ``d(x_k, x_{k+m})`` for
    ``k = 1 .. max(iterations, 1)``; it is ``None`` when ``x_0, x_1, x_2``
    are not pairwise distinct, since then ``p0`` is undefined.
    """

    status: SolveStatus
    point: PointRef
    iterations: int
    final_gap: Scalar
    bound_trace: Optional[tuple[Scalar, ...]]
    alpha_used: Scalar
    p0: Optional[Scalar]
    tol: Scalar
    witness: Optional[PointRef] = None

    @property
    def ok(self) -> bool:
        return self.status in (SolveStatus.CONVERGED, SolveStatus.REACHED_EXACT_FIXED_POINT)


def _check_alpha(alpha: Scalar) -> None:
    if alpha < 0 or alpha >= 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")


def apriori_error_bound(alpha: Scalar, p0: Scalar, n: int, gap: Optional[int] = None) -> Scalar:
    """Bound on ``d(x_n, x_{n+gap})`` along an orbit with first perimeter ``p0``.

    With ``gap`` the bound is ``alpha**(n-1) (1 - alpha**gap) / (1 - alpha) p0``;
    without it, the gap-free form ``alpha**(n-1) p0 / (1 - alpha)``.
    """
    _check_alpha(alpha)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p0 < 0:
        raise ValueError(f"p0 must be >= 0, got {p0}")
    head = alpha ** (n - 1)
    if gap is None:
        return checked(head * p0 / (1 - alpha))
    if gap < 1:
        raise ValueError(f"gap must be >= 1, got {gap}")
    return checked(head * (1 - alpha**gap) / (1 - alpha) * p0)


def _coerce(space: MetricSpace, x: Scalar) -> Scalar:
    if space.exact:
        return Fraction(x)
    return float(x)


def picard_solve(
    space: MetricSpace,
    map: SelfMap,
    x0: PointRef,
    alpha: Scalar,
    tol: Scalar,
    max_iter: int,
) -> SolveResult:
    """Iterate ``x_{k+1} = T x_k`` from ``x0``.

    Stops at an exact fixed point, when ``d(x_k, x_{k+1}) <= tol``, when a
    period-two point (``T x != x``, ``T T x = x``) shows up, or after
    ``max_iter`` steps.  ``alpha`` is the perimeter-contraction coefficient,
    certified by the caller; it only scales the reported bounds.
    """
    _check_alpha(alpha)
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    alpha = _coerce(space, alpha)
    tol = _coerce(space, tol)
    space.require(x0)

    head = orbit(map, x0, 2).points
    p0 = None
    if len(head) == 3 and len(set(head)) == 3:
        p0 = perimeter(space, Triple(*head))

    def bounds(n: int):
        if p0 is None:
            return None
        return tuple(apriori_error_bound(alpha, p0, k) for k in range(1, max(n, 1) + 1))

    def result(status, x, n, gap, witness=None):
        return SolveResult(status, x, n, gap, bounds(n), alpha, p0, tol, witness)

    x = x0
    zero = Fraction(0) if space.exact else 0.0
    for n in range(max_iter + 1):
        nxt = apply(map, x)
        if nxt == x:
            return result(SolveStatus.REACHED_EXACT_FIXED_POINT, x, n, zero)
        if apply(map, nxt) == x:
            return result(SolveStatus.CONDITION_I_VIOLATION, x, n, space.distance(x, nxt), x)
        gap = space.distance(x, nxt)
        if (gap <= tol) if is_exact(gap) else le(gap, tol, space.tolerance):
            return result(SolveStatus.CONVERGED, x, n, gap)
        if n == max_iter:
            return result(SolveStatus.STALLED_BUDGET, x, n, gap)
        x = nxt
    raise AssertionError("unreachable")


def perimeter_sequence(space: MetricSpace, map: SelfMap, x0: PointRef, n: int) -> list[Scalar]:
    """Orbit perimeters ``p_0 .. p_n``, cut short at the first degenerate triple."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return list(orbit(map, x0, n + 2).perimeters)
