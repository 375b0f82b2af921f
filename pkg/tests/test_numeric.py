import math
from fractions import Fraction

import pytest

from triperi.numeric import (
    CapacityError,
    Tolerance,
    checked,
    eq,
    format_scalar,
    le,
    parse_scalar,
)


@pytest.mark.parametrize(
    "token, value",
    [("3", Fraction(3)), ("-7/8", Fraction(-7, 8)), ("0.125", Fraction(1, 8)), ("1e-3", Fraction(1, 1000))],
)
def test_parse_exact(token, value):
    assert parse_scalar(token) == value


def test_parse_float_mode_and_rejects():
    assert parse_scalar("1/4", exact=False) == 0.25
    with pytest.raises(ValueError):
        parse_scalar("abc")
    with pytest.raises(ValueError):
        parse_scalar("1/0")


def test_checked_width():
    assert checked(Fraction(1, 2**254)) == Fraction(1, 2**254)
    with pytest.raises(CapacityError):
        checked(Fraction(1, 2**255))
    with pytest.raises(CapacityError):
        checked(Fraction(-(2**255)))
    with pytest.raises(ValueError):
        checked(math.nan)
    with pytest.raises(ValueError):
        checked(math.inf)


def test_format():
    assert format_scalar(Fraction(7, 8)) == "7/8"
    assert format_scalar(Fraction(2)) == "2"
    assert format_scalar(0.1) == "0.1"


def test_tolerant_comparisons():
    tol = Tolerance()
    assert eq(1.0, 1.0 + 1e-12, tol)
    assert not eq(1.0, 1.0 + 1e-6, tol)
    assert le(1.0 + 1e-13, 1.0, tol)
    assert not le(Fraction(1, 3) + Fraction(1, 10**30), Fraction(1, 3))
