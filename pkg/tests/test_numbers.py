"""Natural/integer carriers, binary coding, and generic powering."""

import pytest
from hypothesis import given, strategies as st

from certalg.errors import InvalidInputError, StructuralError
from certalg.numbers import (bin_add_monoid, bin_suc, bin_to_str, from_bin,
                             int_add_group, is_canonical_bin, monus,
                             nat_add_monoid, nat_monus_semigroup,
                             nat_mul_monoid, pos_nat_mul_monoid, power,
                             power_instrumented, to_bin)
from certalg.structures import Kind, StructureInstance, check_laws


def test_monus_truncates_at_zero():
    assert monus(5, 3) == 2
    assert monus(3, 5) == 0
    assert monus(0, 0) == 0
    assert monus(7, 7) == 0


@given(st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=0, max_value=10**6))
def test_monus_is_max_of_difference_and_zero(a, b):
    assert monus(a, b) == max(a - b, 0)


# ----------------------------------------------------------------
# binary coding: least-significant-bit-first lists, no trailing zeros


def test_to_bin_known_values():
    assert to_bin(0) == []
    assert to_bin(1) == [1]
    assert to_bin(2) == [0, 1]
    assert to_bin(6) == [0, 1, 1]
    assert to_bin(10) == [0, 1, 0, 1]


def test_to_bin_rejects_negatives():
    with pytest.raises(InvalidInputError):
        to_bin(-1)


def test_from_bin_requires_canonical_form():
    assert from_bin([0, 1, 1]) == 6
    with pytest.raises(InvalidInputError):
        from_bin([1, 0])  # trailing zero
    with pytest.raises(InvalidInputError):
        from_bin([2])


def test_is_canonical_bin():
    assert is_canonical_bin([])
    assert is_canonical_bin([1])
    assert is_canonical_bin([0, 1])
    assert not is_canonical_bin([0])
    assert not is_canonical_bin([1, 1, 0])


@given(st.integers(min_value=0, max_value=2**80))
def test_bin_round_trip(n):
    bits = to_bin(n)
    assert is_canonical_bin(bits)
    assert from_bin(bits) == n


@given(st.integers(min_value=0, max_value=2**80))
def test_bin_suc_is_the_successor_homomorphism(n):
    assert bin_suc(to_bin(n)) == to_bin(n + 1)


def test_bin_to_str_most_significant_first():
    assert bin_to_str(to_bin(6)) == "0b110"
    assert bin_to_str(to_bin(0)) == "0b0"
    assert bin_to_str(to_bin(1)) == "0b1"


def test_bin_addition_through_the_monoid():
    m = bin_add_monoid()
    s = m.ops["op"](to_bin(6), to_bin(7))
    assert from_bin(s) == 13
    assert m.ops["identity"]() == []


# ----------------------------------------------------------------
# generic binary powering


def test_power_matches_builtin_pow():
    m = nat_mul_monoid()
    for n in range(0, 65):
        assert power(m, 3, n) == 3**n


def test_power_over_additive_group_is_multiplication():
    g = int_add_group()
    assert power(g, -7, 13) == -91
    assert power(g, 5, 0) == 0


def test_power_squaring_count_is_floor_log2():
    m = nat_mul_monoid()
    for n in range(1, 65):
        _, squarings, _ = power_instrumented(m, 2, n)
        assert squarings == n.bit_length() - 1


def test_power_zero_exponent_uses_identity():
    result, squarings, mults = power_instrumented(nat_mul_monoid(), 9, 0)
    assert result == 1
    assert squarings == 0 and mults == 0


def test_power_rejects_negative_exponent():
    with pytest.raises(InvalidInputError):
        power(nat_mul_monoid(), 2, -1)


def test_power_requires_monoid_shape():
    semigroup = nat_monus_semigroup()
    with pytest.raises(StructuralError):
        power(semigroup, 2, 3)


# ----------------------------------------------------------------
# shipped instances


@pytest.mark.parametrize("build,kind", [
    (nat_add_monoid, Kind.COMMUTATIVE_MONOID),
    (nat_mul_monoid, Kind.COMMUTATIVE_MONOID),
    (pos_nat_mul_monoid, Kind.CC_MONOID),
    (int_add_group, Kind.COMMUTATIVE_GROUP),
    (bin_add_monoid, Kind.COMMUTATIVE_MONOID),
])
def test_shipped_instances_are_lawful(build, kind):
    inst = build()
    assert inst.kind is kind
    assert check_laws(inst, seed=1, budget=120).ok


def test_monus_semigroup_is_an_intentional_negative_control():
    report = check_laws(nat_monus_semigroup(), seed=1, budget=120, sweep=6)
    assert not report.ok


def test_cached_constructors_return_the_same_object():
    assert nat_add_monoid() is nat_add_monoid()
    assert int_add_group() is int_add_group()
