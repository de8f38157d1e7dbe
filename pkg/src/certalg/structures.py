"""Algebraic structure kinds, decidable carriers, and executable law suites.

A StructureInstance packages a carrier (DSet) with named operations for one
kind in the tower Magma .. Field. check_laws runs the kind's law catalogue
over a small exhaustive sweep plus seeded random samples and reports every
counterexample it finds.
"""

from __future__ import annotations

import itertools
import random
import zlib
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional

from .errors import StructuralError


class Kind(Enum):
    MAGMA = "Magma"
    SEMIGROUP = "Semigroup"
    COMMUTATIVE_SEMIGROUP = "CommutativeSemigroup"
    MONOID = "Monoid"
    COMMUTATIVE_MONOID = "CommutativeMonoid"
    CC_MONOID = "CCMonoid"
    FACTORIZATION_MONOID = "FactorizationMonoid"
    GROUP = "Group"
    COMMUTATIVE_GROUP = "CommutativeGroup"
    RINGOID = "Ringoid"
    RING = "Ring"
    RING_WITH_ONE = "RingWithOne"
    COMMUTATIVE_RING = "CommutativeRing"
    INTEGRAL_RING = "IntegralRing"
    GCD_RING = "GCDRing"
    EUCLIDEAN_RING = "EuclideanRing"
    FACTORIZATION_RING = "FactorizationRing"
    UNIQUE_FACTORIZATION_RING = "UniqueFactorizationRing"
    FIELD = "Field"


# Immediate parents in the tower; a kind inherits every ancestor's laws.
KIND_PARENTS = {
    Kind.MAGMA: (),
    Kind.SEMIGROUP: (Kind.MAGMA,),
    Kind.COMMUTATIVE_SEMIGROUP: (Kind.SEMIGROUP,),
    Kind.MONOID: (Kind.SEMIGROUP,),
    Kind.COMMUTATIVE_MONOID: (Kind.MONOID, Kind.COMMUTATIVE_SEMIGROUP),
    Kind.CC_MONOID: (Kind.COMMUTATIVE_MONOID,),
    Kind.FACTORIZATION_MONOID: (Kind.CC_MONOID,),
    Kind.GROUP: (Kind.MONOID,),
    Kind.COMMUTATIVE_GROUP: (Kind.GROUP, Kind.COMMUTATIVE_MONOID),
    Kind.RINGOID: (Kind.COMMUTATIVE_GROUP,),
    Kind.RING: (Kind.RINGOID,),
    Kind.RING_WITH_ONE: (Kind.RING,),
    Kind.COMMUTATIVE_RING: (Kind.RING_WITH_ONE,),
    Kind.INTEGRAL_RING: (Kind.COMMUTATIVE_RING,),
    Kind.GCD_RING: (Kind.INTEGRAL_RING,),
    Kind.EUCLIDEAN_RING: (Kind.INTEGRAL_RING,),
    Kind.FACTORIZATION_RING: (Kind.INTEGRAL_RING,),
    Kind.UNIQUE_FACTORIZATION_RING: (Kind.FACTORIZATION_RING,),
    Kind.FIELD: (Kind.UNIQUE_FACTORIZATION_RING,),
}

GROUP_LIKE_KINDS = frozenset({
    Kind.MAGMA, Kind.SEMIGROUP, Kind.COMMUTATIVE_SEMIGROUP, Kind.MONOID,
    Kind.COMMUTATIVE_MONOID, Kind.CC_MONOID, Kind.FACTORIZATION_MONOID,
    Kind.GROUP, Kind.COMMUTATIVE_GROUP,
})

RING_LIKE_KINDS = frozenset(set(Kind) - GROUP_LIKE_KINDS)

# Kinds direct_product supports: one operation, no cancellation/factoring claims.
PRODUCT_KINDS = frozenset({
    Kind.MAGMA, Kind.SEMIGROUP, Kind.COMMUTATIVE_SEMIGROUP, Kind.MONOID,
    Kind.COMMUTATIVE_MONOID, Kind.GROUP, Kind.COMMUTATIVE_GROUP,
})

_GROUP_ROLES = {"op", "identity", "inverse", "factor"}
_RING_ROLES = {
    "add", "neg", "zero", "mul", "one", "inv", "gcd", "div_mod", "norm",
    "factor", "is_unit", "unit_inv", "canon_unit", "primality", "prime_split",
}

REQUIRED_OPS = {
    Kind.MAGMA: frozenset({"op"}),
    Kind.SEMIGROUP: frozenset({"op"}),
    Kind.COMMUTATIVE_SEMIGROUP: frozenset({"op"}),
    Kind.MONOID: frozenset({"op", "identity"}),
    Kind.COMMUTATIVE_MONOID: frozenset({"op", "identity"}),
    Kind.CC_MONOID: frozenset({"op", "identity"}),
    Kind.FACTORIZATION_MONOID: frozenset({"op", "identity", "factor"}),
    Kind.GROUP: frozenset({"op", "identity", "inverse"}),
    Kind.COMMUTATIVE_GROUP: frozenset({"op", "identity", "inverse"}),
    Kind.RINGOID: frozenset({"add", "neg", "zero", "mul"}),
    Kind.RING: frozenset({"add", "neg", "zero", "mul"}),
    Kind.RING_WITH_ONE: frozenset({"add", "neg", "zero", "mul", "one"}),
    Kind.COMMUTATIVE_RING: frozenset({"add", "neg", "zero", "mul", "one"}),
    Kind.INTEGRAL_RING: frozenset({"add", "neg", "zero", "mul", "one"}),
    Kind.GCD_RING: frozenset({"add", "neg", "zero", "mul", "one", "gcd"}),
    Kind.EUCLIDEAN_RING: frozenset({"add", "neg", "zero", "mul", "one", "div_mod", "norm"}),
    Kind.FACTORIZATION_RING: frozenset({"add", "neg", "zero", "mul", "one", "factor"}),
    Kind.UNIQUE_FACTORIZATION_RING: frozenset({"add", "neg", "zero", "mul", "one", "factor"}),
    Kind.FIELD: frozenset({"add", "neg", "zero", "mul", "one", "inv"}),
}


@dataclass(frozen=True, slots=True)
class Decision:
    """Decided proposition: holds plus opaque evidence (witness or refuter)."""

    holds: bool
    evidence: Any = None

    @classmethod
    def yes(cls, witness=None):
        return cls(True, witness)

    @classmethod
    def no(cls, refuter=None):
        return cls(False, refuter)

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class DSet:
    """Carrier with decidable equality and a deterministic sample generator.

    enumeration, when present, is a bounded tuple of carrier elements used
    for exhaustive law sweeps. variants, when present, maps an element to
    eq-equal elements built through a different construction path.
    """

    name: str
    eq: Callable[[Any, Any], Decision]
    sample: Callable[[int, int], list]
    enumeration: Optional[tuple] = None
    variants: Optional[Callable[[Any, random.Random], list]] = None


def decide_eq(dset: DSet, x, y) -> Decision:
    return dset.eq(x, y)


@dataclass(frozen=True)
class StructureInstance:
    kind: Kind
    base: DSet
    ops: dict
    name: str = ""

    def op(self, role: str):
        try:
            return self.ops[role]
        except KeyError:
            raise StructuralError(f"{self.name or self.kind.value}: missing op {role!r}") from None


def ancestors(kind: Kind) -> frozenset:
    """The kind itself plus all tower ancestors."""
    seen = set()
    stack = [kind]
    while stack:
        k = stack.pop()
        if k in seen:
            continue
        seen.add(k)
        stack.extend(KIND_PARENTS[k])
    return frozenset(seen)


def validate_instance(inst: StructureInstance) -> None:
    """Check the ops table against the kind's signature.

    Required roles must be present; all keys must be known roles. Roles
    from higher tower levels are allowed as auxiliary capability.
    """
    required = REQUIRED_OPS[inst.kind]
    missing = required - set(inst.ops)
    if missing:
        raise StructuralError(
            f"{inst.name or inst.kind.value}: kind {inst.kind.value} requires ops {sorted(missing)}")
    known = _GROUP_ROLES | _RING_ROLES
    unknown = set(inst.ops) - known
    if unknown:
        raise StructuralError(
            f"{inst.name or inst.kind.value}: unknown op roles {sorted(unknown)}")
    for role, fn in inst.ops.items():
        if not callable(fn):
            raise StructuralError(f"{inst.name or inst.kind.value}: op {role!r} is not callable")


@dataclass(frozen=True)
class LawReport:
    kind: Kind
    instance: str
    cases: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class _Law:
    name: str
    # number of fresh samples consumed per random case
    sample_arity: int
    # number of elements in a stored counterexample tuple
    case_arity: int
    pred: Callable[..., bool]
    # congruence laws splice an eq-equal variant in as the second element
    uses_variant: bool = False


def _congruence_case(chunk, rng, dset):
    x = chunk[0]
    if dset.variants is not None:
        options = dset.variants(x, rng)
        xv = options[rng.randrange(len(options))] if options else x
    else:
        xv = x
    return (x, xv) + tuple(chunk[1:])


def _laws_for(inst: StructureInstance) -> list:
    dset = inst.base
    beq = lambda a, b: dset.eq(a, b).holds
    kinds = ancestors(inst.kind)
    laws = []

    if inst.kind in GROUP_LIKE_KINDS:
        op = inst.ops["op"]
        laws.append(_Law(
            "congruence(op)", 2, 3,
            lambda x, xv, y: not beq(x, xv)
            or (beq(op(x, y), op(xv, y)) and beq(op(y, x), op(y, xv))),
            uses_variant=True))
        if Kind.SEMIGROUP in kinds:
            laws.append(_Law(
                "associativity(op)", 3, 3,
                lambda x, y, z: beq(op(op(x, y), z), op(x, op(y, z)))))
        if Kind.COMMUTATIVE_SEMIGROUP in kinds:
            laws.append(_Law(
                "commutativity(op)", 2, 2,
                lambda x, y: beq(op(x, y), op(y, x))))
        if Kind.MONOID in kinds:
            e = inst.ops["identity"]()
            laws.append(_Law(
                "identity(op)", 1, 1,
                lambda x: beq(op(e, x), x) and beq(op(x, e), x)))
        if Kind.CC_MONOID in kinds:
            laws.append(_Law(
                "cancellation-left", 3, 3,
                lambda x, y, z: beq(y, z) or not beq(op(x, y), op(x, z))))
            laws.append(_Law(
                "cancellation-right", 3, 3,
                lambda x, y, z: beq(y, z) or not beq(op(y, x), op(z, x))))
        if Kind.GROUP in kinds:
            e = inst.ops["identity"]()
            inv = inst.ops["inverse"]
            laws.append(_Law(
                "inverse(op)", 1, 1,
                lambda x: beq(op(inv(x), x), e) and beq(op(x, inv(x)), e)))
            laws.append(_Law(
                "congruence(inverse)", 1, 2,
                lambda x, xv: not beq(x, xv) or beq(inv(x), inv(xv)),
                uses_variant=True))
            laws.append(_Law(
                "inverse-uniqueness", 2, 2,
                lambda x, y: not beq(op(x, y), e) or beq(y, inv(x))))
            laws.append(_Law(
                "inverse-antihomomorphism", 2, 2,
                lambda x, y: beq(inv(op(x, y)), op(inv(y), inv(x)))))
        if Kind.FACTORIZATION_MONOID in kinds:
            e = inst.ops["identity"]()
            factor = inst.ops["factor"]

            def reconstructs(x, _op=op, _e=e, _factor=factor, _beq=beq):
                data = _factor(x)
                acc = data.unit
                for entry in data.entries:
                    for _ in range(entry.multiplicity):
                        acc = _op(acc, entry.prime)
                return _beq(acc, x)

            laws.append(_Law("factorization-reconstructs", 1, 1, reconstructs))
        return laws

    add = inst.ops["add"]
    neg = inst.ops["neg"]
    zero = inst.ops["zero"]()
    mul = inst.ops["mul"]

    laws.append(_Law(
        "congruence(add)", 2, 3,
        lambda x, xv, y: not beq(x, xv)
        or (beq(add(x, y), add(xv, y)) and beq(add(y, x), add(y, xv))),
        uses_variant=True))
    laws.append(_Law(
        "congruence(neg)", 1, 2,
        lambda x, xv: not beq(x, xv) or beq(neg(x), neg(xv)),
        uses_variant=True))
    laws.append(_Law(
        "congruence(mul)", 2, 3,
        lambda x, xv, y: not beq(x, xv)
        or (beq(mul(x, y), mul(xv, y)) and beq(mul(y, x), mul(y, xv))),
        uses_variant=True))
    laws.append(_Law(
        "associativity(add)", 3, 3,
        lambda x, y, z: beq(add(add(x, y), z), add(x, add(y, z)))))
    laws.append(_Law(
        "commutativity(add)", 2, 2,
        lambda x, y: beq(add(x, y), add(y, x))))
    laws.append(_Law(
        "identity(add)", 1, 1,
        lambda x: beq(add(zero, x), x) and beq(add(x, zero), x)))
    laws.append(_Law(
        "inverse(add)", 1, 1,
        lambda x: beq(add(x, neg(x)), zero) and beq(add(neg(x), x), zero)))

    if Kind.RING in kinds:
        laws.append(_Law(
            "associativity(mul)", 3, 3,
            lambda x, y, z: beq(mul(mul(x, y), z), mul(x, mul(y, z)))))
        laws.append(_Law(
            "distributivity-left", 3, 3,
            lambda x, y, z: beq(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))))
        laws.append(_Law(
            "distributivity-right", 3, 3,
            lambda x, y, z: beq(mul(add(x, y), z), add(mul(x, z), mul(y, z)))))
    if Kind.RING_WITH_ONE in kinds:
        one = inst.ops["one"]()
        laws.append(_Law(
            "identity(mul)", 1, 1,
            lambda x: beq(mul(one, x), x) and beq(mul(x, one), x)))
    if Kind.COMMUTATIVE_RING in kinds:
        laws.append(_Law(
            "commutativity(mul)", 2, 2,
            lambda x, y: beq(mul(x, y), mul(y, x))))
    if Kind.INTEGRAL_RING in kinds:
        laws.append(_Law(
            "no-zero-divisors", 2, 2,
            lambda x, y: beq(x, zero) or beq(y, zero) or not beq(mul(x, y), zero)))
    if "gcd" in inst.ops and "div_mod" in inst.ops and Kind.INTEGRAL_RING in kinds:
        gcd = inst.ops["gcd"]
        div_mod = inst.ops["div_mod"]

        def gcd_divides(a, b, _beq=beq):
            g = gcd(a, b)
            if _beq(g, zero):
                return _beq(a, zero) and _beq(b, zero)
            return _beq(div_mod(a, g)[1], zero) and _beq(div_mod(b, g)[1], zero)

        laws.append(_Law("gcd-divides", 2, 2, gcd_divides))
    if Kind.EUCLIDEAN_RING in kinds:
        div_mod = inst.ops["div_mod"]
        norm = inst.ops["norm"]

        def division_contract(a, b, _beq=beq):
            if _beq(b, zero):
                return True
            q, r = div_mod(a, b)
            if not _beq(a, add(mul(q, b), r)):
                return False
            return _beq(r, zero) or norm(r) < norm(b)

        laws.append(_Law("division-contract", 2, 2, division_contract))
    if "factor" in inst.ops and Kind.RING_WITH_ONE in kinds:
        one = inst.ops["one"]()
        factor = inst.ops["factor"]

        def ring_reconstructs(x, _beq=beq):
            if _beq(x, zero):
                return True
            data = factor(x)
            acc = data.unit
            for entry in data.entries:
                for _ in range(entry.multiplicity):
                    acc = mul(acc, entry.prime)
            return _beq(acc, x)

        laws.append(_Law("factorization-reconstructs", 1, 1, ring_reconstructs))
    if Kind.FIELD in kinds:
        one = inst.ops["one"]()
        inv = inst.ops["inv"]
        laws.append(_Law(
            "multiplicative-inverse", 1, 1,
            lambda x: beq(x, zero) or (beq(mul(inv(x), x), one) and beq(mul(x, inv(x)), one))))
        laws.append(_Law(
            "congruence(inv)", 1, 2,
            lambda x, xv: beq(x, zero) or not beq(x, xv) or beq(inv(x), inv(xv)),
            uses_variant=True))
    return laws


def _law_seed(seed: int, law_name: str) -> int:
    return (seed * 0x9E3779B1 + zlib.crc32(law_name.encode())) & 0x7FFFFFFF


def check_laws(inst: StructureInstance, seed: int = 1, budget: int = 200,
               sweep: int = 4) -> LawReport:
    """Run the kind's law catalogue; collect every counterexample found.

    Each law sees an exhaustive sweep over the first `sweep` enumerated
    elements (when the carrier has an enumeration) plus `budget` seeded
    random cases. Deterministic for a fixed (seed, budget, sweep).
    """
    validate_instance(inst)
    laws = _laws_for(inst)
    dset = inst.base
    failures = []
    cases = 0
    for law in laws:
        lseed = _law_seed(seed, law.name)
        rng = random.Random(lseed)
        pred = law.pred
        if dset.enumeration is not None and sweep > 0:
            small = dset.enumeration[:sweep]
            for tup in itertools.product(small, repeat=law.case_arity):
                cases += 1
                if not pred(*tup):
                    failures.append((law.name, tup))
        pool = dset.sample(lseed, budget * law.sample_arity)
        n_cases = len(pool) // law.sample_arity if law.sample_arity else 0
        k = law.sample_arity
        for i in range(min(budget, n_cases)):
            chunk = pool[i * k:(i + 1) * k]
            tup = _congruence_case(chunk, rng, dset) if law.uses_variant else tuple(chunk)
            cases += 1
            if not pred(*tup):
                failures.append((law.name, tup))
    return LawReport(inst.kind, inst.name, cases, tuple(failures))


def recheck_failure(inst: StructureInstance, law_name: str, case: tuple) -> bool:
    """Re-evaluate one reported counterexample; True means it still fails."""
    for law in _laws_for(inst):
        if law.name == law_name:
            if len(case) != law.case_arity:
                raise StructuralError(f"case arity mismatch for {law_name}")
            return not law.pred(*case)
    raise StructuralError(f"unknown law {law_name!r} for kind {inst.kind.value}")


def direct_product(a: StructureInstance, b: StructureInstance) -> StructureInstance:
    """Componentwise product of two instances of the same one-operation kind."""
    if a.kind != b.kind:
        raise StructuralError(f"kind mismatch: {a.kind.value} vs {b.kind.value}")
    if a.kind not in PRODUCT_KINDS:
        raise StructuralError(f"direct_product does not support kind {a.kind.value}")
    ea, eb = a.base.eq, b.base.eq

    def eq(p, q):
        d1 = ea(p[0], q[0])
        if not d1.holds:
            return Decision.no(("left", d1.evidence))
        d2 = eb(p[1], q[1])
        if not d2.holds:
            return Decision.no(("right", d2.evidence))
        return Decision.yes((d1.evidence, d2.evidence))

    sa, sb = a.base.sample, b.base.sample

    def sample(seed, count):
        xs = sa(seed, count)
        ys = sb(seed + 0x5D, count)
        return list(zip(xs, ys))

    enumeration = None
    if a.base.enumeration is not None and b.base.enumeration is not None:
        enumeration = tuple(itertools.product(a.base.enumeration[:8], b.base.enumeration[:8]))

    va, vb = a.base.variants, b.base.variants
    variants = None
    if va is not None or vb is not None:
        def variants(p, rng):
            xs = va(p[0], rng) if va is not None else [p[0]]
            ys = vb(p[1], rng) if vb is not None else [p[1]]
            return [(x, y) for x in xs[:2] for y in ys[:2]]

    dset = DSet(f"({a.base.name} x {b.base.name})", eq, sample, enumeration, variants)
    opa, opb = a.ops["op"], b.ops["op"]
    ops = {"op": lambda p, q: (opa(p[0], q[0]), opb(p[1], q[1]))}
    if "identity" in a.ops:
        ia, ib = a.ops["identity"](), b.ops["identity"]()
        ops["identity"] = lambda: (ia, ib)
    if "inverse" in a.ops:
        inva, invb = a.ops["inverse"], b.ops["inverse"]
        ops["inverse"] = lambda p: (inva(p[0]), invb(p[1]))
    return StructureInstance(a.kind, dset, ops, f"({a.name} x {b.name})")


_VIEW_DOWNGRADES = {
    Kind.FIELD, Kind.UNIQUE_FACTORIZATION_RING, Kind.FACTORIZATION_RING,
    Kind.GCD_RING, Kind.EUCLIDEAN_RING, Kind.INTEGRAL_RING,
    Kind.COMMUTATIVE_RING, Kind.RING_WITH_ONE, Kind.RING, Kind.RINGOID,
}


def view_as(inst: StructureInstance, kind: Kind) -> StructureInstance:
    """View an instance at an ancestor kind (ring kinds expose their additive
    group when viewed at a one-operation kind)."""
    if kind == inst.kind:
        return inst
    if kind not in ancestors(inst.kind):
        raise StructuralError(
            f"{kind.value} is not an ancestor of {inst.kind.value}")
    if inst.kind in RING_LIKE_KINDS and kind in GROUP_LIKE_KINDS:
        zero = inst.ops["zero"]()
        ops = {"op": inst.ops["add"], "identity": lambda: zero, "inverse": inst.ops["neg"]}
        ops = {r: f for r, f in ops.items() if r in REQUIRED_OPS[kind] or r in ("identity", "inverse")}
        return StructureInstance(kind, inst.base, ops, f"{inst.name}@{kind.value}")
    return StructureInstance(kind, inst.base, dict(inst.ops), f"{inst.name}@{kind.value}")


def multiplicative_monoid(inst: StructureInstance) -> StructureInstance:
    """The (mul, one) monoid of a ring-with-one instance."""
    if inst.kind not in RING_LIKE_KINDS or "one" not in inst.ops:
        raise StructuralError("multiplicative_monoid needs a ring with one")
    one = inst.ops["one"]()
    kind = (Kind.COMMUTATIVE_MONOID
            if Kind.COMMUTATIVE_RING in ancestors(inst.kind) else Kind.MONOID)
    ops = {"op": inst.ops["mul"], "identity": lambda: one}
    return StructureInstance(kind, inst.base, ops, f"{inst.name}-mul")
