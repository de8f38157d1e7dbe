"""Canonical fractions over a gcd-capable ring (the integers ship).

Canonical form: denominator canonically positive, gcd(num, den) a unit,
zero is 0/1. add_optimized reduces by gcd(candidate numerator, g) only,
where g = gcd of the two denominators; add_naive cross-multiplies and
fully reduces, and is the differential oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .structures import DSet, Decision, Kind, StructureInstance
from .euclid import int_ring
from .numbers import _mixed_int


@dataclass(frozen=True, slots=True)
class Fraction:
    num: object
    den: object

    def __str__(self):
        return f"{self.num}" if self.den == 1 else f"{self.num}/{self.den}"


def mk_fraction(ring: StructureInstance, n, d) -> Fraction:
    eq = ring.base.eq
    zero = ring.ops["zero"]()
    one = ring.ops["one"]()
    if eq(d, zero).holds:
        raise ZeroDivisionError("zero denominator")
    if eq(n, zero).holds:
        return Fraction(zero, one)
    gcd = ring.ops["gcd"]
    dm = ring.ops["div_mod"]
    mul = ring.ops["mul"]
    g = gcd(n, d)
    if not ring.ops["is_unit"](g):
        n = dm(n, g)[0]
        d = dm(d, g)[0]
    c = ring.ops["canon_unit"](d)
    if not eq(c, one).holds:
        n = mul(c, n)
        d = mul(c, d)
    return Fraction(n, d)


def is_canonical(ring: StructureInstance, x: Fraction) -> bool:
    eq = ring.base.eq
    zero = ring.ops["zero"]()
    one = ring.ops["one"]()
    if eq(x.den, zero).holds:
        return False
    if eq(x.num, zero).holds:
        return eq(x.den, one).holds
    if not ring.ops["is_unit"](ring.ops["gcd"](x.num, x.den)):
        return False
    return eq(ring.ops["canon_unit"](x.den), one).holds


def add_naive(ring: StructureInstance, x: Fraction, y: Fraction) -> Fraction:
    add = ring.ops["add"]
    mul = ring.ops["mul"]
    return mk_fraction(ring, add(mul(x.num, y.den), mul(y.num, x.den)),
                       mul(x.den, y.den))


def add_optimized(ring: StructureInstance, x: Fraction, y: Fraction) -> Fraction:
    """Common denominator through g = gcd(d1, d2); the candidate numerator
    only needs reduction by gcd(num, g) because the cofactors d1/g and d2/g
    share no further factor with it in a unique-factorization setting."""
    eq = ring.base.eq
    zero = ring.ops["zero"]()
    one = ring.ops["one"]()
    add = ring.ops["add"]
    mul = ring.ops["mul"]
    gcd = ring.ops["gcd"]
    dm = ring.ops["div_mod"]
    g = gcd(x.den, y.den)
    t1 = dm(x.den, g)[0]
    t2 = dm(y.den, g)[0]
    num = add(mul(x.num, t2), mul(y.num, t1))
    if eq(num, zero).holds:
        return Fraction(zero, one)
    den = mul(g, mul(t1, t2))
    g2 = gcd(num, g)
    if not ring.ops["is_unit"](g2):
        num = dm(num, g2)[0]
        den = dm(den, g2)[0]
    c = ring.ops["canon_unit"](den)
    if not eq(c, one).holds:
        num = mul(c, num)
        den = mul(c, den)
    return Fraction(num, den)


def mul_fractions(ring: StructureInstance, x: Fraction, y: Fraction) -> Fraction:
    # cross-reduce before multiplying so intermediates stay small
    eq = ring.base.eq
    zero = ring.ops["zero"]()
    one = ring.ops["one"]()
    mul = ring.ops["mul"]
    gcd = ring.ops["gcd"]
    dm = ring.ops["div_mod"]
    if eq(x.num, zero).holds or eq(y.num, zero).holds:
        return Fraction(zero, one)
    g1 = gcd(x.num, y.den)
    g2 = gcd(y.num, x.den)
    n1 = dm(x.num, g1)[0]
    d2 = dm(y.den, g1)[0]
    n2 = dm(y.num, g2)[0]
    d1 = dm(x.den, g2)[0]
    num = mul(n1, n2)
    den = mul(d1, d2)
    c = ring.ops["canon_unit"](den)
    if not eq(c, one).holds:
        num = mul(c, num)
        den = mul(c, den)
    return Fraction(num, den)


def neg_fraction(ring: StructureInstance, x: Fraction) -> Fraction:
    return Fraction(ring.ops["neg"](x.num), x.den)


def inverse(ring: StructureInstance, x: Fraction) -> Fraction:
    eq = ring.base.eq
    if eq(x.num, ring.ops["zero"]()).holds:
        raise ZeroDivisionError("inverse of zero fraction")
    one = ring.ops["one"]()
    mul = ring.ops["mul"]
    c = ring.ops["canon_unit"](x.num)
    if not eq(c, one).holds:
        return Fraction(mul(c, x.den), mul(c, x.num))
    return Fraction(x.den, x.num)


@lru_cache(maxsize=None)
def fraction_field() -> StructureInstance:
    return build_fraction_field(int_ring())


def build_fraction_field(ring: StructureInstance) -> StructureInstance:
    base_eq = ring.base.eq

    def eq(x, y):
        if base_eq(x.num, y.num).holds and base_eq(x.den, y.den).holds:
            return Decision.yes((x.num, x.den))
        return Decision.no((x, y))

    def sample(seed, count):
        rng = random.Random(seed)
        out = []
        for _ in range(count):
            n = rng.randint(-30, 30)
            d = 0
            while d == 0:
                d = rng.randint(-30, 30)
            out.append(mk_fraction(ring, n, d))
        return out

    enum = []
    for n in range(-3, 4):
        for d in range(1, 4):
            f = mk_fraction(ring, n, d)
            if f not in enum:
                enum.append(f)

    mulr = ring.ops["mul"]

    def variants(x, rng):
        k = rng.randint(2, 5)
        return [mk_fraction(ring, mulr(x.num, k), mulr(x.den, k))]

    dset = DSet(f"frac({ring.base.name})", eq, sample, tuple(enum), variants)
    ops = {
        "add": lambda x, y: add_optimized(ring, x, y),
        "neg": lambda x: neg_fraction(ring, x),
        "zero": lambda: Fraction(ring.ops["zero"](), ring.ops["one"]()),
        "mul": lambda x, y: mul_fractions(ring, x, y),
        "one": lambda: Fraction(ring.ops["one"](), ring.ops["one"]()),
        "inv": lambda x: inverse(ring, x),
    }
    return StructureInstance(Kind.FIELD, dset, ops, "frac-field")
