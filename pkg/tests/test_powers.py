from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dejean_check.powers import (
    border_array,
    exponent,
    has_period,
    is_r_power,
    smallest_period,
    smallest_period_naive,
)
from dejean_check.words import DomainError

small_words = st.lists(st.integers(1, 3), min_size=1, max_size=30)


@pytest.mark.parametrize("v, p", [("01010", 2), ("aaa", 1), ("1234", 4), ("121123", 6), ("abaab", 3)])
def test_smallest_period(v, p):
    assert smallest_period(v) == p


@pytest.mark.parametrize("v, e", [("01010", Fraction(5, 2)), ("aaa", Fraction(3)), ("121123", Fraction(1))])
def test_exponent(v, e):
    assert exponent(v) == e


def test_is_r_power_examples():
    assert is_r_power("01010", Fraction(5, 2))
    assert not is_r_power("01010", 3)
    assert is_r_power("aa", 2)


def test_empty_word_errors():
    for fn in (smallest_period, exponent):
        with pytest.raises(DomainError):
            fn("")
    with pytest.raises(DomainError):
        is_r_power("", 1)


def test_r_below_one_rejected():
    with pytest.raises(DomainError):
        is_r_power("ab", Fraction(1, 2))


def test_border_array_known():
    assert border_array("aabaaab") == [0, 1, 0, 1, 2, 2, 3]


@given(small_words)
def test_smallest_period_matches_brute_force(v):
    p = smallest_period(v)
    assert p == smallest_period_naive(v)
    assert 1 <= p <= len(v)
    assert all(p <= q for q in range(1, len(v) + 1) if has_period(v, q))


@given(small_words)
def test_exponent_is_tight(v):
    e = exponent(v)
    assert is_r_power(v, e)
    assert not is_r_power(v, e + Fraction(1, len(v) ** 2))
    assert (e == 1) == all(not has_period(v, q) for q in range(1, len(v)))
