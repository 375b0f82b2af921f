"""Two-mode scalars: exact rationals with a checked width, or tolerant floats.

Exact values are plain :class:`fractions.Fraction` objects; every value that
leaves a public operation passes through :func:`checked`, which enforces the
signed 256-bit capacity of numerator and denominator.  Float values are plain
``float`` and are compared with :class:`Tolerance`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

WIDTH_BITS = 256
_LIMIT = 1 << (WIDTH_BITS - 1)

_INT_RE = re.compile(r"[+-]?\d+\Z")
_RAT_RE = re.compile(r"[+-]?\d+/\d+\Z")
_DEC_RE = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\Z")


class CapacityError(ArithmeticError):
    """An exact value does not fit the checked integer width."""


@dataclass(frozen=True)
class Tolerance:
    rtol: float = 1e-9
    atol: float = 1e-12

    def close(self, a: float, b: float) -> bool:
        return math.isclose(a, b, rel_tol=self.rtol, abs_tol=self.atol)


DEFAULT_TOLERANCE = Tolerance()


def checked(x: Scalar) -> Scalar:
    """Return ``x`` unchanged if it is representable, else raise.

    Fractions must have numerator and denominator of magnitude below
    ``2**127``; floats must be finite.
    """
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        return x
    if isinstance(x, int):
        x = Fraction(x)
    if abs(x.numerator) >= _LIMIT or x.denominator >= _LIMIT:
        raise CapacityError(f"exact value exceeds {WIDTH_BITS}-bit width: {x}")
    return x


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (Fraction, int))


def as_exact(x: Scalar | int | str) -> Fraction:
    """Convert to an exact rational; floats convert to their binary value."""
    if isinstance(x, str):
        return parse_scalar(x, exact=True)
    return checked(Fraction(x))


def parse_scalar(token: str, exact: bool = True) -> Scalar:
    """Parse an integer, ``num/den`` rational or decimal token.

    In exact mode decimals are read as their exact decimal value
    (``"0.1"`` is ``1/10``).
    """
    token = token.strip()
    if _INT_RE.match(token) or _RAT_RE.match(token):
        try:
            value = Fraction(token)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator: {token!r}") from None
    elif _DEC_RE.match(token):
        value = Fraction(token) if exact else float(token)
    else:
        raise ValueError(f"not a number: {token!r}")
    if exact:
        return checked(value)
    return checked(float(value))


def format_scalar(x: Scalar) -> str:
    """``num/den`` for rationals (bare integer when den is 1), shortest
    round-trip decimal for floats."""
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def eq(a: Scalar, b: Scalar, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return tol.close(float(a), float(b))


def le(a: Scalar, b: Scalar, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    if is_exact(a) and is_exact(b):
        return a <= b
    return float(a) <= float(b) or tol.close(float(a), float(b))
