"""Self-maps, orbits, fixed points and the period-two condition."""
from __future__ import annotations

import enum
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Optional, Union

from .metric import (
    FiniteSpace,
    MetricSpace,
    PointRef,
    Triple,
    UnknownPointError,
    WindowError,
    perimeter,
)
from .numeric import Scalar


class MapError(ValueError):
    """A self-map is not total on its space."""


class SelfMap:
    """Base class: a total map ``T: X -> X``."""

    space: MetricSpace
    kind: str = "abstract"

    def _image(self, p: PointRef) -> PointRef:
        raise NotImplementedError

    def __call__(self, p: PointRef) -> PointRef:
        return apply(self, p)

    def declared_fixed_points(self) -> tuple[PointRef, ...]:
        return ()


class TableMap(SelfMap):
    """Finite association ``point -> point``.

    ``table`` is either a sequence of images indexed by point or a mapping.
    """

    kind = "table"

    def __init__(
        self,
        space: MetricSpace,
        table: Union[Sequence[PointRef], Mapping[PointRef, PointRef]],
    ) -> None:
        pts = space.points()
        if isinstance(table, Mapping):
            images = dict(table)
        else:
            table = list(table)
            if len(table) != len(pts):
                raise MapError(f"table has {len(table)} entries for {len(pts)} points")
            images = dict(zip(pts, table))
        missing = [p for p in pts if p not in images]
        if missing:
            raise MapError(f"map is not total: no image for {space.name(missing[0])}")
        extra = [p for p in images if not space.contains(p)]
        if extra:
            raise MapError(f"source {extra[0]!r} is not a point of the space")
        for p, q in images.items():
            if not space.contains(q):
                raise MapError(f"image of {space.name(p)} is outside the space: {q!r}")
        self.space = space
        self.table = {p: images[p] for p in pts}

    def _image(self, p: PointRef) -> PointRef:
        return self.table[p]

    @classmethod
    def from_names(cls, space: FiniteSpace, pairs: Mapping[str, str]) -> TableMap:
        return cls(space, {space.lookup(s): space.lookup(t) for s, t in pairs.items()})

    @classmethod
    def identity(cls, space: MetricSpace) -> TableMap:
        return cls(space, {p: p for p in space.points()})

    @classmethod
    def constant(cls, space: MetricSpace, target: PointRef) -> TableMap:
        return cls(space, {p: target for p in space.points()})


class RuleMap(SelfMap):
    """Map given by a rule on symbolic indices; total on the whole space.

    ``fixed`` lists fixed points the rule knows about, so that counts over a
    window can include them.
    """

    kind = "rule"

    def __init__(
        self,
        space: MetricSpace,
        rule: Callable[[PointRef], PointRef],
        fixed: Iterable[PointRef] = (),
    ) -> None:
        self.space = space
        self.rule = rule
        self._fixed = tuple(sorted(fixed))

    def _image(self, p: PointRef) -> PointRef:
        return self.rule(p)

    def declared_fixed_points(self) -> tuple[PointRef, ...]:
        return self._fixed


def apply(map: SelfMap, p: PointRef) -> PointRef:
    map.space.require(p)
    q = map._image(p)
    if not map.space.contains(q):
        raise MapError(f"image of {p!r} is outside the space: {q!r}")
    return q


class StopReason(str, enum.Enum):
    FIXED_POINT_REACHED = "fixed-point-reached"
    PERIMETER_DEGENERATE = "perimeter-degenerate"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class OrbitTrace:
    """``x_0, x_1, ...`` with ``x_{k+1} = T x_k`` and perimeters ``p_k``.

    ``perimeters[k]`` is the perimeter of ``(x_k, x_{k+1}, x_{k+2})``; the
    sequence ends at the first triple that is not pairwise distinct.
    """

    points: tuple[PointRef, ...]
    perimeters: tuple[Scalar, ...]
    stop: StopReason

    def __len__(self) -> int:
        return len(self.points)


def _perimeters(space: MetricSpace, pts: Sequence[PointRef]) -> tuple[list, bool]:
    out = []
    for k in range(len(pts) - 2):
        a, b, c = pts[k : k + 3]
        if a == b or b == c or a == c:
            return out, True
        out.append(perimeter(space, Triple(a, b, c)))
    return out, False


def orbit(map: SelfMap, x0: PointRef, n: int) -> OrbitTrace:
    """Iterate ``n`` times from ``x0``, stopping early at a fixed point.

    When a fixed point is reached the trace ends with it (it is not
    repeated), e.g. ``(z, x)`` for a map with ``Tz = x`` and ``Tx = x``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    pts = [x0]
    map.space.require(x0)
    stop = None
    for _ in range(n + 1):
        nxt = apply(map, pts[-1])
        if nxt == pts[-1]:
            stop = StopReason.FIXED_POINT_REACHED
            break
        if len(pts) == n + 1:
            break
        pts.append(nxt)
    perims, degenerate = _perimeters(map.space, pts)
    if stop is None:
        stop = StopReason.PERIMETER_DEGENERATE if degenerate else StopReason.BUDGET_EXHAUSTED
    return OrbitTrace(tuple(pts), tuple(perims), stop)


def _domain(map: SelfMap, window: Optional[int]) -> list[PointRef]:
    if map.kind == "rule" and window is None and getattr(map.space, "default_window", 1) is None:
        raise WindowError("a window is required for rule maps")
    return map.space.points(window)


def fixed_points(map: SelfMap, window: Optional[int] = None) -> list[PointRef]:
    """All ``p`` in the (windowed) domain with ``T p == p``, in order."""
    return [p for p in _domain(map, window) if apply(map, p) == p]


def find_period_two_violation(map: SelfMap, window: Optional[int] = None) -> Optional[PointRef]:
    """First ``x`` with ``T x != x`` and ``T(T x) == x``, or ``None``."""
    for p in _domain(map, window):
        q = apply(map, p)
        if q != p and apply(map, q) == p:
            return p
    return None


__all__ = [
    "MapError",
    "OrbitTrace",
    "RuleMap",
    "SelfMap",
    "StopReason",
    "TableMap",
    "UnknownPointError",
    "apply",
    "find_period_two_violation",
    "fixed_points",
    "orbit",
]
