"""Division, extended gcd certificates, primality, residue rings/fields."""

import math
import random

import pytest

from certalg.errors import (CompositeModulusError, InvalidInputError,
                            StructuralError)
from certalg.euclid import (BezoutCertificate, DividesWitness, PrimalityCert,
                            Residue, check_divides, euclidean_div_mod,
                            extended_gcd, int_ring, is_prime, make_residue,
                            prime_split, residue_field, residue_ring,
                            verify_bezout, verify_primality)
from certalg.structures import Kind, check_laws


@pytest.fixture(scope="module")
def ring():
    return int_ring()


# ================================================================
# canonical division
# ================================================================

# divmod with remainder forced into [0, |b|); pinned cases cover every
# sign combination
DIVMOD_CASES = [
    (7, 3, 2, 1),
    (-7, 3, -3, 2),
    (7, -3, -2, 1),
    (-7, -3, 3, 2),
    (6, 3, 2, 0),
    (-6, 3, -2, 0),
    (0, 5, 0, 0),
    (1, 1, 1, 0),
]


@pytest.mark.parametrize("a,b,q,r", DIVMOD_CASES)
def test_euclidean_div_mod_pinned(a, b, q, r):
    assert euclidean_div_mod(a, b) == (q, r)


def test_euclidean_div_mod_contract_on_a_grid():
    for a in range(-40, 41):
        for b in list(range(-12, 0)) + list(range(1, 13)):
            q, r = euclidean_div_mod(a, b)
            assert a == q * b + r
            assert 0 <= r < abs(b)


def test_euclidean_div_mod_rejects_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        euclidean_div_mod(5, 0)


def test_check_divides(ring):
    assert check_divides(ring, DividesWitness(3, 12, 4))
    assert not check_divides(ring, DividesWitness(3, 12, 5))


# ================================================================
# extended gcd with Bezout certificates
# ================================================================


def test_extended_gcd_small_example(ring):
    cert = extended_gcd(ring, 12, 8)
    assert (cert.g, cert.u, cert.v) == (4, 1, -1)
    assert (cert.qa, cert.qb) == (3, 2)
    assert verify_bezout(ring, cert)


def test_extended_gcd_matches_math_gcd_on_grid(ring):
    for a in range(-30, 31):
        for b in range(-30, 31):
            cert = extended_gcd(ring, a, b)
            assert cert.g == math.gcd(a, b)
            assert verify_bezout(ring, cert)


def test_extended_gcd_zero_zero(ring):
    cert = extended_gcd(ring, 0, 0)
    assert cert.g == 0
    assert verify_bezout(ring, cert)


def test_extended_gcd_large_random_pairs(ring):
    rng = random.Random(77)
    for _ in range(200):
        a = rng.randint(-2**63, 2**63)
        b = rng.randint(-2**63, 2**63)
        cert = extended_gcd(ring, a, b)
        assert cert.g == math.gcd(a, b)
        assert cert.u * a + cert.v * b == cert.g
        assert verify_bezout(ring, cert)


def test_verify_bezout_rejects_forged_certificates(ring):
    good = extended_gcd(ring, 12, 8)
    assert not verify_bezout(ring, BezoutCertificate(12, 8, good.g, good.u + 1,
                                                     good.v, good.qa, good.qb))
    assert not verify_bezout(ring, BezoutCertificate(12, 8, 2, 1, -1, 6, 4))
    assert not verify_bezout(ring, BezoutCertificate(12, 8, good.g, good.u,
                                                     good.v, good.qa, good.qb + 3))


# ================================================================
# primality with witnesses
# ================================================================


def test_is_prime_verdicts():
    assert is_prime(2).verdict == "prime"
    assert is_prime(97).verdict == "prime"
    assert is_prime(-13).verdict == "prime"
    cert = is_prime(91)
    assert cert.verdict == "composite"
    assert cert.witness == DividesWitness(7, 91, 13)


def test_is_prime_rejects_units_and_zero():
    for n in (0, 1, -1):
        with pytest.raises(InvalidInputError):
            is_prime(n)


def test_is_prime_agrees_with_a_sieve():
    limit = 2000
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            for j in range(i * i, limit + 1, i):
                sieve[j] = False
    for n in range(2, limit + 1):
        assert (is_prime(n).verdict == "prime") == sieve[n]


def test_verify_primality_checks_witness_consistency():
    assert verify_primality(is_prime(97))
    assert verify_primality(is_prime(91))
    # tampered composite witness: quotient wrong
    bad = PrimalityCert(91, "composite", DividesWitness(7, 91, 12))
    assert not verify_primality(bad)
    # trivial divisor smuggled in
    bad2 = PrimalityCert(91, "composite", DividesWitness(1, 91, 91))
    assert not verify_primality(bad2)
    # claiming a composite is prime
    assert not verify_primality(PrimalityCert(91, "prime", None))


# ================================================================
# prime-split
# ================================================================


def test_prime_split_prefers_the_left_factor(ring):
    side, w = prime_split(ring, 5, 10, 5, DividesWitness(5, 50, 10))
    assert side == "left"
    assert w == DividesWitness(5, 10, 2)


def test_prime_split_right_side(ring):
    side, w = prime_split(ring, 5, 3, 10, DividesWitness(5, 30, 6))
    assert side == "right"
    assert w.dividend == 10
    assert check_divides(ring, w)


def test_prime_split_rejects_bogus_witness(ring):
    with pytest.raises(InvalidInputError):
        prime_split(ring, 5, 3, 7, DividesWitness(5, 21, 4))


def test_prime_split_exhaustive_small(ring):
    for p in (2, 3, 5, 7):
        for a in range(1, 16):
            for b in range(1, 16):
                if (a * b) % p:
                    continue
                side, w = prime_split(ring, p, a, b,
                                      DividesWitness(p, a * b, (a * b) // p))
                assert check_divides(ring, w)
                assert w.divisor == p
                assert w.dividend == (a if side == "left" else b)


# ================================================================
# residue rings and fields
# ================================================================


def test_make_residue_reduces_canonically(ring):
    assert make_residue(ring, 6, 9) == Residue(6, 3)
    assert make_residue(ring, 6, -1) == Residue(6, 5)
    assert str(make_residue(ring, 6, 3)) == "3 (mod 6)"


def test_residue_ring_addition_wraps(ring):
    zr = residue_ring(ring, 6)
    assert zr.kind is Kind.COMMUTATIVE_RING
    s = zr.ops["add"](make_residue(ring, 6, 4), make_residue(ring, 6, 5))
    assert s == Residue(6, 3)


def test_residue_ring_rejects_degenerate_moduli(ring):
    with pytest.raises(InvalidInputError):
        residue_ring(ring, 0)
    with pytest.raises(InvalidInputError):
        residue_ring(ring, 1)


def test_residue_ring_laws_hold_for_small_moduli(ring):
    for b in (2, 6, 12):
        assert check_laws(residue_ring(ring, b), seed=1, budget=120).ok


def test_residue_field_inverse_example(ring):
    f7 = residue_field(ring, 7, is_prime(7))
    assert f7.kind is Kind.FIELD
    inv = f7.ops["inv"](make_residue(ring, 7, 3))
    assert inv == Residue(7, 5)


def test_residue_field_all_inverses_mod_13(ring):
    f = residue_field(ring, 13, is_prime(13))
    mul, inv = f.ops["mul"], f.ops["inv"]
    one = f.ops["one"]()
    for x in range(1, 13):
        r = make_residue(ring, 13, x)
        assert mul(inv(r), r) == one


def test_residue_field_rejects_composite_modulus_with_witness(ring):
    with pytest.raises(CompositeModulusError) as exc:
        residue_field(ring, 6, is_prime(6))
    w = exc.value.cert.witness
    assert w.divisor == 2 and w.dividend == 6


def test_residue_field_rejects_mismatched_certificate(ring):
    with pytest.raises(InvalidInputError):
        residue_field(ring, 7, is_prime(11))
    forged = PrimalityCert(9, "prime", None)
    with pytest.raises(InvalidInputError):
        residue_field(ring, 9, forged)


def test_residue_field_inverse_of_zero_raises(ring):
    f7 = residue_field(ring, 7, is_prime(7))
    with pytest.raises(ZeroDivisionError):
        f7.ops["inv"](make_residue(ring, 7, 0))


def test_residue_values_carry_their_modulus(ring):
    zr6 = residue_ring(ring, 6)
    a = make_residue(ring, 6, 2)
    b = make_residue(ring, 7, 2)
    assert not zr6.base.eq(a, b).holds


def test_int_ring_is_lawful_and_euclidean(ring):
    assert ring.kind is Kind.EUCLIDEAN_RING
    assert check_laws(ring, seed=2, budget=150).ok
