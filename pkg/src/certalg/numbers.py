"""Arithmetic carriers: naturals, integers, and canonical binary coding.

Bin values are lists of bits, least significant first, with no trailing
zeros; the empty list is zero. power() raises an element of any monoid
instance to a natural power by square-and-multiply over the bit list.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .errors import InvalidInputError, StructuralError
from .structures import DSet, Decision, Kind, StructureInstance


def monus(a: int, b: int) -> int:
    """Truncated subtraction on naturals: max(a - b, 0)."""
    return a - b if a >= b else 0


# ---------------------------------------------------------------------------
# binary coding


def is_canonical_bin(bits) -> bool:
    return all(b in (0, 1) for b in bits) and (not bits or bits[-1] == 1)


def to_bin(n: int) -> list:
    if n < 0:
        raise InvalidInputError("to_bin takes a natural number")
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    return bits


def from_bin(bits) -> int:
    if not is_canonical_bin(bits):
        raise InvalidInputError(f"non-canonical bit list {bits!r}")
    n = 0
    for b in reversed(bits):
        n = (n << 1) | b
    return n


def bin_suc(bits) -> list:
    """Successor directly on the bit list: flip trailing 1s, set the first 0."""
    if not is_canonical_bin(bits):
        raise InvalidInputError(f"non-canonical bit list {bits!r}")
    out = list(bits)
    i = 0
    while i < len(out) and out[i] == 1:
        out[i] = 0
        i += 1
    if i == len(out):
        out.append(1)
    else:
        out[i] = 1
    return out


def bin_to_str(bits) -> str:
    """Most-significant-first text form, e.g. [0,1,1] -> '0b110'."""
    if not bits:
        return "0b0"
    return "0b" + "".join(str(b) for b in reversed(bits))


# ---------------------------------------------------------------------------
# powering in a monoid


def power(monoid: StructureInstance, x, n: int):
    """x raised to the natural n using the binary coding of the exponent."""
    result, _, _ = power_instrumented(monoid, x, n)
    return result


def power_instrumented(monoid: StructureInstance, x, n: int):
    """Like power, also returning (squarings, multiplications-into-result).

    Squarings happen once per bit below the highest set bit, so the count
    is floor(log2 n) for n >= 1.
    """
    if "op" not in monoid.ops or "identity" not in monoid.ops:
        raise StructuralError("power needs a monoid-shaped instance (op, identity)")
    if n < 0:
        raise InvalidInputError("exponent must be a natural number")
    op = monoid.ops["op"]
    acc = monoid.ops["identity"]()
    bits = to_bin(n)
    squarings = 0
    multiplications = 0
    base = x
    last = len(bits) - 1
    for i, bit in enumerate(bits):
        if bit:
            acc = op(acc, base)
            multiplications += 1
        if i < last:
            base = op(base, base)
            squarings += 1
    return acc, squarings, multiplications


# ---------------------------------------------------------------------------
# carriers


def _int_eq(a, b):
    return Decision.yes(a) if a == b else Decision.no((a, b))


def _mixed_int(rng: random.Random) -> int:
    r = rng.random()
    if r < 0.6:
        return rng.randint(-20, 20)
    if r < 0.9:
        return rng.randint(-10**4, 10**4)
    return rng.randint(-(2**63), 2**63 - 1)


@lru_cache(maxsize=None)
def int_dset() -> DSet:
    def sample(seed, count):
        rng = random.Random(seed)
        return [_mixed_int(rng) for _ in range(count)]

    enum = (0,) + tuple(v for k in range(1, 17) for v in (k, -k))
    return DSet("int", _int_eq, sample, enumeration=enum)


@lru_cache(maxsize=None)
def nat_dset() -> DSet:
    def sample(seed, count):
        rng = random.Random(seed)
        return [abs(_mixed_int(rng)) for _ in range(count)]

    return DSet("nat", _int_eq, sample, enumeration=tuple(range(33)))


@lru_cache(maxsize=None)
def pos_nat_dset() -> DSet:
    def sample(seed, count):
        rng = random.Random(seed)
        return [abs(_mixed_int(rng)) + 1 for _ in range(count)]

    return DSet("nat>=1", _int_eq, sample, enumeration=tuple(range(1, 34)))


def _bin_eq(a, b):
    return Decision.yes(tuple(a)) if a == b else Decision.no((tuple(a), tuple(b)))


@lru_cache(maxsize=None)
def bin_dset() -> DSet:
    def sample(seed, count):
        rng = random.Random(seed)
        return [to_bin(abs(_mixed_int(rng))) for _ in range(count)]

    return DSet("bin", _bin_eq, sample,
                enumeration=tuple(to_bin(n) for n in range(17)))


# ---------------------------------------------------------------------------
# shipped instances


@lru_cache(maxsize=None)
def nat_add_monoid() -> StructureInstance:
    ops = {"op": lambda a, b: a + b, "identity": lambda: 0}
    return StructureInstance(Kind.COMMUTATIVE_MONOID, nat_dset(), ops, "nat-add")


@lru_cache(maxsize=None)
def nat_mul_monoid() -> StructureInstance:
    ops = {"op": lambda a, b: a * b, "identity": lambda: 1}
    return StructureInstance(Kind.COMMUTATIVE_MONOID, nat_dset(), ops, "nat-mul")


@lru_cache(maxsize=None)
def pos_nat_mul_monoid() -> StructureInstance:
    """Nonzero naturals under multiplication; cancellation holds here."""
    ops = {"op": lambda a, b: a * b, "identity": lambda: 1}
    return StructureInstance(Kind.CC_MONOID, pos_nat_dset(), ops, "nat-pos-mul")


@lru_cache(maxsize=None)
def int_add_group() -> StructureInstance:
    ops = {"op": lambda a, b: a + b, "identity": lambda: 0, "inverse": lambda a: -a}
    return StructureInstance(Kind.COMMUTATIVE_GROUP, int_dset(), ops, "int-add")


@lru_cache(maxsize=None)
def nat_monus_semigroup() -> StructureInstance:
    """Negative control: truncated subtraction is NOT associative.

    Registered so law checking demonstrably finds counterexamples; excluded
    from the lawful-instance roster.
    """
    ops = {"op": monus}
    return StructureInstance(Kind.SEMIGROUP, nat_dset(), ops, "nat-monus")


@lru_cache(maxsize=None)
def bin_add_monoid() -> StructureInstance:
    """Addition transported onto canonical bit lists through the coding."""

    def op(a, b):
        return to_bin(from_bin(a) + from_bin(b))

    ops = {"op": op, "identity": lambda: []}
    return StructureInstance(Kind.COMMUTATIVE_MONOID, bin_dset(), ops, "bin-add")
