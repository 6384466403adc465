from fractions import Fraction

import pytest

from coxsort import series


def F(*ints):
    return [Fraction(x) for x in ints]


def test_make_pads_and_truncates():
    assert series.make([1, 2], 4) == F(1, 2, 0, 0)
    assert series.make([1, 2, 3, 4], 2) == F(1, 2)


def test_mul():
    a = series.make([1, 1], 5)  # 1 + q
    b = series.mul(a, a, 5)
    assert b == F(1, 2, 1, 0, 0)


def test_derivative_and_shift():
    a = series.make([3, 1, 4, 1], 4)
    assert series.derivative(a) == F(1, 8, 3, 0)
    assert series.shift_down(series.make([0, 5, 7], 3)) == F(5, 7, 0)
    with pytest.raises(ValueError):
        series.shift_down(series.make([1], 1))


def test_reciprocal_inverts():
    a = series.make([2, -1, 3, 5, -2], 8)
    inv = series.reciprocal(a, 8)
    assert series.mul(a, inv, 8) == series.make([1], 8)
    with pytest.raises(ValueError):
        series.reciprocal(series.make([0, 1], 3), 3)


def test_divide():
    num = series.make([0, 1], 6)        # q
    den = series.make([1, -1], 6)       # 1 - q
    geo = series.divide(num, den, 6)    # q + q^2 + ...
    assert geo == F(0, 1, 1, 1, 1, 1)
