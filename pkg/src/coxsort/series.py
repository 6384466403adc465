"""Dense truncated power series over exact rationals.

A series is a list of Fraction coefficients [c0, c1, ...]; all operations
take an explicit truncation order (number of coefficients kept).
"""
from __future__ import annotations

from fractions import Fraction

Series = list[Fraction]


def make(coeffs, order: int) -> Series:
    out = [Fraction(c) for c in coeffs[:order]]
    out += [Fraction(0)] * (order - len(out))
    return out


def mul(a: Series, b: Series, order: int) -> Series:
    out = [Fraction(0)] * order
    for i, ai in enumerate(a[:order]):
        if not ai:
            continue
        for j, bj in enumerate(b[:order - i]):
            out[i + j] += ai * bj
    return out


def derivative(a: Series) -> Series:
    return [k * c for k, c in enumerate(a)][1:] + [Fraction(0)]


def shift_down(a: Series) -> Series:
    """Divide by the variable; requires zero constant term."""
    if a[0]:
        raise ValueError("nonzero constant term")
    return a[1:] + [Fraction(0)]


def reciprocal(a: Series, order: int) -> Series:
    if not a[0]:
        raise ValueError("reciprocal needs a unit constant term")
    out = [Fraction(1) / a[0]] + [Fraction(0)] * (order - 1)
    for k in range(1, order):
        acc = Fraction(0)
        for j in range(1, min(k, len(a) - 1) + 1):
            acc += a[j] * out[k - j]
        out[k] = -acc / a[0]
    return out


def divide(num: Series, den: Series, order: int) -> Series:
    return mul(num, reciprocal(den, order), order)
