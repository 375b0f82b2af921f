"""Metric spaces given by a distance oracle, triples, perimeters, betweenness."""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

import numpy as np

from .numeric import (
    DEFAULT_TOLERANCE,
    CapacityError,
    Scalar,
    Tolerance,
    checked,
    eq,
    le,
)

#: Exact-mode enumeration limit for computable spaces.
MAX_EXACT_WINDOW = 200


class UnknownPointError(KeyError):
    """A point does not belong to the space."""


class WindowError(ValueError):
    """Enumeration over an infinite space was requested without a window."""


@total_ordering
class _Star:
    """The accumulation point of a computable space; sorts after every index."""

    _instance: Optional[_Star] = None

    def __new__(cls) -> _Star:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "STAR"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("triperi.STAR")

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, _Star)):
            return False
        return NotImplemented

    def __reduce__(self):
        return (_Star, ())


STAR = _Star()

PointRef = Union[int, _Star]


def _check_point_type(p: object) -> None:
    if isinstance(p, bool) or not isinstance(p, (int, _Star)):
        raise UnknownPointError(p)


class MetricSpace(ABC):
    """A point universe with a symmetric distance oracle.

    Subclasses implement :meth:`_distance`, :meth:`contains` and
    :meth:`points`.  Points are ``int`` indices, plus :data:`STAR` for
    computable spaces; their natural order is the lexicographic order used
    for every reported witness.
    """

    exact: bool = True
    tolerance: Tolerance = DEFAULT_TOLERANCE

    @abstractmethod
    def contains(self, p: PointRef) -> bool: ...

    @abstractmethod
    def points(self, window: Optional[int] = None) -> list[PointRef]:
        """Points in lexicographic order, restricted to indices ``<= window``."""

    @abstractmethod
    def _distance(self, p: PointRef, q: PointRef) -> Scalar: ...

    def name(self, p: PointRef) -> str:
        return "x*" if p is STAR else f"x{p}"

    def lookup(self, name: str) -> PointRef:
        """Inverse of :meth:`name`."""
        for p in self.points():
            if self.name(p) == name:
                return p
        raise UnknownPointError(name)

    def require(self, *pts: PointRef) -> None:
        for p in pts:
            _check_point_type(p)
            if not self.contains(p):
                raise UnknownPointError(p)

    def distance(self, p: PointRef, q: PointRef) -> Scalar:
        self.require(p, q)
        if p == q:
            return Fraction(0) if self.exact else 0.0
        return checked(self._distance(p, q))


class FiniteSpace(MetricSpace):
    """Matrix-backed finite space with named points.

    Parameters
    ----------
    names : sequence of str
        Point names; point ``i`` is ``names[i]``.
    matrix : array-like
        Square matrix of distances.  Entries are kept as given (no symmetry
        repair), so that :func:`verify_metric_axioms` can report defects.
    exact : bool, optional
        Exact rational mode.  Inferred from the entries when omitted: exact
        iff every entry is an ``int`` or ``Fraction``.
    """

    def __init__(
        self,
        names: Sequence[str],
        matrix,
        exact: Optional[bool] = None,
        tolerance: Tolerance = DEFAULT_TOLERANCE,
    ) -> None:
        names = [str(n) for n in names]
        if len(set(names)) != len(names):
            raise ValueError("point names must be unique")
        if any(not n or any(c.isspace() for c in n) for n in names):
            raise ValueError("point names must be non-empty and contain no whitespace")
        if isinstance(matrix, np.ndarray):
            rows = matrix.tolist()
        else:
            rows = [list(r) for r in matrix]
        n = len(names)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"distance matrix must be {n}x{n}")
        if exact is None:
            exact = all(
                isinstance(v, (int, Fraction)) and not isinstance(v, bool)
                for r in rows
                for v in r
            )
        if exact:
            conv = [[checked(Fraction(v)) for v in r] for r in rows]
        else:
            conv = [[checked(float(v)) for v in r] for r in rows]
        self.names: tuple[str, ...] = tuple(names)
        self.matrix: tuple[tuple[Scalar, ...], ...] = tuple(tuple(r) for r in conv)
        self.exact = bool(exact)
        self.tolerance = tolerance
        self._index = {nm: i for i, nm in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        mode = "exact" if self.exact else "float"
        return f"FiniteSpace({len(self)} points, {mode})"

    def contains(self, p: PointRef) -> bool:
        return isinstance(p, int) and not isinstance(p, bool) and 0 <= p < len(self.names)

    def points(self, window: Optional[int] = None) -> list[PointRef]:
        n = len(self.names) if window is None else min(len(self.names), window + 1)
        return list(range(n))

    def name(self, p: PointRef) -> str:
        self.require(p)
        return self.names[p]

    def lookup(self, name: str) -> PointRef:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownPointError(name) from None

    def distance(self, p: PointRef, q: PointRef) -> Scalar:
        # raw entry, diagonal included: the matrix may be defective
        self.require(p, q)
        return self.matrix[p][q]

    def _distance(self, p: PointRef, q: PointRef) -> Scalar:
        return self.matrix[p][q]

    def scaled(self, factor) -> FiniteSpace:
        """Copy with every distance multiplied by ``factor``."""
        if self.exact:
            factor = Fraction(factor)
        else:
            factor = float(factor)
        return FiniteSpace(
            self.names,
            [[v * factor for v in r] for r in self.matrix],
            exact=self.exact,
            tolerance=self.tolerance,
        )

    def as_array(self) -> np.ndarray:
        return np.array([[float(v) for v in r] for r in self.matrix])


class ComputableSpace(MetricSpace):
    """Countable space ``{0, 1, ...} U {STAR}`` with a closed-form distance.

    ``default_window`` bounds enumeration when no window is passed; it never
    restricts :meth:`distance` or a map.
    """

    default_window: Optional[int] = None

    def contains(self, p: PointRef) -> bool:
        return p is STAR or (isinstance(p, int) and not isinstance(p, bool) and p >= 0)

    def resolve_window(self, window: Optional[int]) -> int:
        if window is None:
            window = self.default_window
        if window is None:
            raise WindowError("a window is required to enumerate a computable space")
        if window < 0:
            raise ValueError(f"window must be >= 0, got {window}")
        if self.exact and window > MAX_EXACT_WINDOW:
            raise CapacityError(
                f"window {window} exceeds exact-mode limit {MAX_EXACT_WINDOW}"
            )
        return window

    def points(self, window: Optional[int] = None) -> list[PointRef]:
        return [*range(self.resolve_window(window) + 1), STAR]


@dataclass(frozen=True)
class Triple:
    """Three pairwise distinct points."""

    a: PointRef
    b: PointRef
    c: PointRef

    def __post_init__(self) -> None:
        if self.a == self.b or self.b == self.c or self.a == self.c:
            raise ValueError(f"triple points must be pairwise distinct: {tuple(self)}")

    def __iter__(self):
        return iter((self.a, self.b, self.c))


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    axiom: Optional[str] = None
    witness: tuple[PointRef, ...] = ()
    window: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def distance(space: MetricSpace, p: PointRef, q: PointRef) -> Scalar:
    return space.distance(p, q)


class DistanceTable:
    """Distances among a fixed list of points, evaluated once.

    In exact mode the table also holds an integer copy scaled by the common
    denominator, so sums and ratio comparisons run on Python ints.
    """

    def __init__(self, space: MetricSpace, pts: Sequence[PointRef]) -> None:
        self.points = list(pts)
        self.index = {p: i for i, p in enumerate(self.points)}
        n = len(self.points)
        self.exact = space.exact
        d = [[space.distance(self.points[i], self.points[j]) for j in range(n)] for i in range(n)]
        self.values = d
        if self.exact:
            den = math.lcm(*(v.denominator for r in d for v in r)) if n else 1
            self.scale = den
            self.ints = [[v.numerator * (den // v.denominator) for v in r] for r in d]
        else:
            self.scale = 1
            self.ints = d


def _axiom_fail(axiom, witness, window, space, detail) -> AxiomReport:
    names = ", ".join(space.name(p) for p in witness)
    return AxiomReport(False, axiom, tuple(witness), window, f"{axiom} violated at ({names}): {detail}")


def verify_metric_axioms(space: MetricSpace, window: Optional[int] = None) -> AxiomReport:
    """Exhaustively check the metric axioms on the (windowed) point set.

    Pairs are checked first (nonnegativity, identity, symmetry) in
    lexicographic order, then triangle inequalities.  A triangle witness
    ``(p, r, q)`` means ``d(p, q) > d(p, r) + d(r, q)``; it is the first such
    tuple in lexicographic order.
    """
    pts = space.points(window)
    if not pts:
        raise ValueError("space has no points")
    tol = space.tolerance
    zero = Fraction(0) if space.exact else 0.0
    table = DistanceTable(space, pts)
    d = table.values
    n = len(pts)
    for i in range(n):
        if not eq(d[i][i], zero, tol):
            return _axiom_fail("identity", (pts[i],), window, space, f"d = {d[i][i]}")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if d[i][j] < 0:
                return _axiom_fail("nonnegativity", (pts[i], pts[j]), window, space, f"d = {d[i][j]}")
            if d[i][j] == 0 or (not space.exact and eq(d[i][j], zero, tol)):
                return _axiom_fail("identity", (pts[i], pts[j]), window, space, "distinct points at distance 0")
            if not eq(d[i][j], d[j][i], tol):
                return _axiom_fail(
                    "symmetry", (pts[i], pts[j]), window, space, f"{d[i][j]} != {d[j][i]}"
                )
    # symmetric from here on, so the first violating (p, r, q) has p < q
    ints = table.ints
    for i in range(n):
        row_i = ints[i]
        for k in range(n):
            if k == i:
                continue
            dik = row_i[k]
            row_k = ints[k]
            for j in range(i + 1, n):
                if j == k:
                    continue
                if space.exact:
                    bad = row_i[j] > dik + row_k[j]
                else:
                    bad = not le(row_i[j], dik + row_k[j], tol)
                if bad:
                    return _axiom_fail(
                        "triangle",
                        (pts[i], pts[k], pts[j]),
                        window,
                        space,
                        f"{d[i][j]} > {d[i][k]} + {d[k][j]}",
                    )
    return AxiomReport(True, window=window)


def perimeter(space: MetricSpace, t: Triple) -> Scalar:
    a, b, c = t
    return checked(space.distance(a, b) + space.distance(b, c) + space.distance(a, c))


def is_between(space: MetricSpace, x: PointRef, y: PointRef, z: PointRef) -> bool:
    """True iff ``d(x, z) == d(x, y) + d(y, z)``: ``y`` lies between ``x`` and ``z``."""
    Triple(x, y, z)
    return eq(space.distance(x, z), space.distance(x, y) + space.distance(y, z), space.tolerance)
