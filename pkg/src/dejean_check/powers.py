"""Periods, exponents and fractional powers of finite words.

These work on any sequence of hashable letters (strings included).  Exponents
are returned as :class:`fractions.Fraction`, always in lowest terms.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .words import DomainError


def border_array(v: Sequence) -> list[int]:
    """KMP failure function: entry ``i`` is the longest proper border of ``v[:i+1]``."""
    border = [0] * len(v)
    k = 0
    for i in range(1, len(v)):
        while k and v[i] != v[k]:
            k = border[k - 1]
        if v[i] == v[k]:
            k += 1
        border[i] = k
    return border


def has_period(v: Sequence, p: int) -> bool:
    return p >= 1 and all(v[i] == v[i + p] for i in range(len(v) - p))


def smallest_period(v: Sequence) -> int:
    if not len(v):
        raise DomainError("the empty word has no smallest period")
    return len(v) - border_array(v)[-1]


def smallest_period_naive(v: Sequence) -> int:
    if not len(v):
        raise DomainError("the empty word has no smallest period")
    return next(p for p in range(1, len(v) + 1) if has_period(v, p))


def exponent(v: Sequence) -> Fraction:
    return Fraction(len(v), smallest_period(v))


def is_r_power(v: Sequence, r: Fraction | int | str) -> bool:
    """Whether ``v`` is an ``r``-power, i.e. its exponent is at least ``r``.

    The smallest period gives the largest exponent, so it is the only period
    that needs checking.
    """
    r = Fraction(r)
    if r < 1:
        raise DomainError("exponent must be at least 1")
    return exponent(v) >= r


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
