"""Trial-division factorization with primality certificates on every prime,
plus a sampled uniqueness suite driven by prime_split witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError, StructuralError
from .structures import DSet, Decision, Kind, LawReport, StructureInstance
from .euclid import (DividesWitness, PrimalityCert, int_ring, is_prime,
                     prime_split, verify_primality, check_divides)
from .numbers import int_dset, pos_nat_dset
from . import certlists


@dataclass(frozen=True, slots=True)
class FactorEntry:
    prime: int
    multiplicity: int
    cert: PrimalityCert


@dataclass(frozen=True, slots=True)
class FactorizationData:
    """unit * product(prime^multiplicity), entries sorted by prime."""

    unit: int
    entries: tuple


def factor(x: int) -> FactorizationData:
    if x == 0:
        raise InvalidInputError("zero has no factorization")
    unit = -1 if x < 0 else 1
    m = abs(x)
    entries = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            mult = 0
            while m % d == 0:
                m //= d
                mult += 1
            entries.append(FactorEntry(d, mult, is_prime(d)))
        d += 1 if d == 2 else 2
    if m > 1:
        entries.append(FactorEntry(m, 1, is_prime(m)))
    return FactorizationData(unit, tuple(entries))


def product_of(f: FactorizationData) -> int:
    acc = f.unit
    for e in f.entries:
        acc *= e.prime ** e.multiplicity
    return acc


def _normalized_entries(f: FactorizationData):
    """Associate-normalize: primes made positive, signs absorbed into the unit."""
    unit = f.unit
    out = []
    for e in f.entries:
        p = e.prime
        if p < 0:
            p = -p
            if e.multiplicity % 2:
                unit = -unit
        out.append((p, e.multiplicity))
    out.sort()
    merged = []
    for p, m in out:
        if merged and merged[-1][0] == p:
            merged[-1] = (p, merged[-1][1] + m)
        else:
            merged.append((p, m))
    return unit, tuple(merged)


def factorizations_equal(f1: FactorizationData, f2: FactorizationData) -> bool:
    return _normalized_entries(f1) == _normalized_entries(f2)


def merge_factorizations(f1: FactorizationData, f2: FactorizationData) -> FactorizationData:
    """Factorization of a product from the factors' data, combining the prime
    multisets with the multiset sum and multiplying the units."""
    d = int_dset()
    m1 = certlists.Multiset(d, tuple((e.prime, e.multiplicity) for e in f1.entries))
    m2 = certlists.Multiset(d, tuple((e.prime, e.multiplicity) for e in f2.entries))
    merged = certlists.mset_sum(m1, m2)
    certs = {e.prime: e.cert for e in f1.entries}
    certs.update({e.prime: e.cert for e in f2.entries})
    entries = tuple(FactorEntry(p, m, certs[p])
                    for p, m in sorted(merged.entries))
    return FactorizationData(f1.unit * f2.unit, entries)


def check_factorization(f: FactorizationData, x: int) -> bool:
    """Re-check a factorization against its subject: product, primality
    certificates, positive canonical primes, unit a unit."""
    if f.unit not in (1, -1):
        return False
    if product_of(f) != x:
        return False
    for e in f.entries:
        if e.prime < 2 or e.multiplicity < 1:
            return False
        if e.cert.subject != e.prime or e.cert.verdict != "prime":
            return False
        if not verify_primality(e.cert):
            return False
    return True


_FIRST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def check_unique_sampled(ring: StructureInstance, seed: int = 1,
                         budget: int = 300) -> LawReport:
    """Sampled uniqueness evidence for a factorization-capable instance.

    Per case: (i) the factorization reconstructs its subject, (ii) the
    directly computed factorization of a product agrees with the merge of
    the factors' data, (iii) a prime_split run on (p, a, b) with p | a*b
    yields a witness that re-checks.
    """
    for role in ("factor", "prime_split"):
        if role not in ring.ops:
            raise StructuralError(f"{ring.name}: uniqueness check needs op {role!r}")
    rng = random.Random(seed)
    do_factor = ring.ops["factor"]
    split = ring.ops["prime_split"]
    group_like = "op" in ring.ops
    mul = ring.ops["op"] if group_like else ring.ops["mul"]
    failures = []
    cases = 0
    lo = 1 if group_like else -(10**6)
    for _ in range(budget):
        x = 0
        while x == 0:
            x = rng.randint(max(lo, -(10**6)), 10**6)
        cases += 1
        fx = do_factor(x)
        if not check_factorization(fx, x):
            failures.append(("factorization-reconstructs", (x,)))

        a = rng.randint(1, 10**3)
        b = rng.randint(1, 10**3)
        cases += 1
        direct = do_factor(mul(a, b))
        merged = merge_factorizations(do_factor(a), do_factor(b))
        if not factorizations_equal(direct, merged):
            failures.append(("independent-factorizations-agree", (a, b)))

        p = _FIRST_PRIMES[rng.randrange(len(_FIRST_PRIMES))]
        if rng.random() < 0.5:
            a2, b2 = a * p, b
        else:
            a2, b2 = a, b * p
        w = DividesWitness(p, a2 * b2, (a2 * b2) // p)
        cases += 1
        try:
            side, witness = split(p, a2, b2, w)
            ok = check_divides(int_ring(), witness)
            ok = ok and witness.divisor == p
            ok = ok and witness.dividend == (a2 if side == "left" else b2)
        except InvalidInputError:
            ok = False
        if not ok:
            failures.append(("prime-split-witness", (p, a2, b2)))
    return LawReport(ring.kind, ring.name, cases, tuple(failures))


@lru_cache(maxsize=None)
def int_factorization_ring() -> StructureInstance:
    """The integers with factorization capability; samples stay at trial-division scale."""
    base = int_ring()
    ops = dict(base.ops)
    ops["factor"] = factor
    ops["prime_split"] = lambda p, a, b, w: prime_split(base, p, a, b, w)

    def sample(seed, count):
        rng = random.Random(seed)
        out = []
        while len(out) < count:
            v = rng.randint(-(10**6), 10**6)
            out.append(v)
        return out

    dset = DSet("int<=1e6", base.base.eq, sample, base.base.enumeration)
    return StructureInstance(Kind.UNIQUE_FACTORIZATION_RING, dset, ops, "int-ufd")


@lru_cache(maxsize=None)
def pos_nat_factorization_monoid() -> StructureInstance:
    """Nonzero naturals under multiplication with factoring into primes."""
    ring = int_ring()
    ops = {
        "op": lambda a, b: a * b,
        "identity": lambda: 1,
        "factor": factor,
        "prime_split": lambda p, a, b, w: prime_split(ring, p, a, b, w),
    }

    def sample(seed, count):
        rng = random.Random(seed)
        return [rng.randint(1, 10**6) for _ in range(count)]

    base = pos_nat_dset()
    dset = DSet("nat>=1<=1e6", base.eq, sample, base.enumeration)
    return StructureInstance(Kind.FACTORIZATION_MONOID, dset, ops, "nat-factor-monoid")
