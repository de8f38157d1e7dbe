"""Canonical fractions over the integers and the two addition routes."""

import fractions as stdlib_fractions

import pytest
from hypothesis import given, strategies as st

from certalg.euclid import int_ring
from certalg.fractions import (Fraction, add_naive, add_optimized,
                               build_fraction_field, fraction_field, inverse,
                               is_canonical, mk_fraction, mul_fractions,
                               neg_fraction)
from certalg.structures import Kind, check_laws

RING = int_ring()


def as_stdlib(x: Fraction) -> stdlib_fractions.Fraction:
    return stdlib_fractions.Fraction(x.num, x.den)


nonzero = st.integers(min_value=-10**6, max_value=10**6).filter(bool)
nums = st.integers(min_value=-10**6, max_value=10**6)


def test_mk_fraction_reduces_and_fixes_sign():
    assert mk_fraction(RING, 2, 4) == Fraction(1, 2)
    assert mk_fraction(RING, 4, -6) == Fraction(-2, 3)
    assert mk_fraction(RING, -3, -9) == Fraction(1, 3)
    assert mk_fraction(RING, 0, 17) == Fraction(0, 1)
    assert mk_fraction(RING, 7, 1) == Fraction(7, 1)


def test_mk_fraction_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        mk_fraction(RING, 1, 0)


def test_is_canonical():
    assert is_canonical(RING, Fraction(1, 2))
    assert is_canonical(RING, Fraction(0, 1))
    assert not is_canonical(RING, Fraction(2, 4))
    assert not is_canonical(RING, Fraction(1, -2))
    assert not is_canonical(RING, Fraction(0, 3))


def test_add_small_example():
    s = add_optimized(RING, mk_fraction(RING, 1, 6), mk_fraction(RING, 1, 4))
    assert s == Fraction(5, 12)
    assert add_naive(RING, mk_fraction(RING, 1, 6), mk_fraction(RING, 1, 4)) == s


@given(nums, nonzero, nums, nonzero)
def test_add_routes_agree_and_stay_canonical(n1, d1, n2, d2):
    x = mk_fraction(RING, n1, d1)
    y = mk_fraction(RING, n2, d2)
    fast = add_optimized(RING, x, y)
    slow = add_naive(RING, x, y)
    assert fast == slow
    assert is_canonical(RING, fast)
    assert as_stdlib(fast) == as_stdlib(x) + as_stdlib(y)


@given(nums, nonzero, nums, nonzero)
def test_mul_matches_stdlib(n1, d1, n2, d2):
    x = mk_fraction(RING, n1, d1)
    y = mk_fraction(RING, n2, d2)
    p = mul_fractions(RING, x, y)
    assert is_canonical(RING, p)
    assert as_stdlib(p) == as_stdlib(x) * as_stdlib(y)


def test_neg_and_inverse():
    x = mk_fraction(RING, 3, -7)
    assert neg_fraction(RING, x) == Fraction(3, 7)
    assert inverse(RING, x) == Fraction(-7, 3)
    assert inverse(RING, mk_fraction(RING, 2, 5)) == Fraction(5, 2)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        inverse(RING, Fraction(0, 1))


def test_str_hides_unit_denominator():
    assert str(Fraction(5, 12)) == "5/12"
    assert str(Fraction(-3, 1)) == "-3"
    assert str(Fraction(0, 1)) == "0"


def test_fraction_field_is_a_lawful_field():
    f = fraction_field()
    assert f.kind is Kind.FIELD
    assert check_laws(f, seed=1, budget=150).ok


def test_fraction_field_is_cached():
    assert fraction_field() is fraction_field()


def test_build_fraction_field_equality_ignores_representation():
    f = build_fraction_field(RING)
    assert f.base.eq(Fraction(1, 2), Fraction(1, 2)).holds
    assert not f.base.eq(Fraction(1, 2), Fraction(1, 3)).holds
