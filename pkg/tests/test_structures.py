"""Law engine tests: kinds, validation, checking, counterexamples."""

import pytest

from certalg.errors import StructuralError
from certalg.structures import (DSet, Decision, Kind, StructureInstance,
                                ancestors, check_laws, decide_eq,
                                direct_product, multiplicative_monoid,
                                recheck_failure, validate_instance, view_as)
from certalg.numbers import (int_add_group, int_dset, nat_add_monoid,
                             nat_dset, nat_monus_semigroup)
from certalg.euclid import int_ring


# ============================================================
# kinds and ancestry
# ============================================================


def test_ancestors_include_self():
    for kind in Kind:
        assert kind in ancestors(kind)


def test_field_sits_on_the_full_ring_tower():
    anc = ancestors(Kind.FIELD)
    for kind in (Kind.MAGMA, Kind.SEMIGROUP, Kind.MONOID, Kind.GROUP,
                 Kind.COMMUTATIVE_GROUP, Kind.RING, Kind.RING_WITH_ONE,
                 Kind.COMMUTATIVE_RING, Kind.INTEGRAL_RING,
                 Kind.FACTORIZATION_RING, Kind.UNIQUE_FACTORIZATION_RING):
        assert kind in anc


def test_monoid_ancestry_is_strictly_smaller_than_group():
    assert ancestors(Kind.MONOID) < ancestors(Kind.GROUP)


def test_commutative_monoid_reaches_commutative_semigroup():
    assert Kind.COMMUTATIVE_SEMIGROUP in ancestors(Kind.COMMUTATIVE_MONOID)


# ============================================================
# decisions
# ============================================================


def test_decision_truthiness():
    assert Decision.yes()
    assert not Decision.no()
    assert Decision.yes(41).evidence == 41
    assert Decision.no(("a", "b")).evidence == ("a", "b")


def test_decide_eq_delegates_to_the_carrier():
    d = DSet(name="flat",
             eq=lambda a, b: Decision.yes() if a == b else Decision.no((a, b)),
             sample=lambda seed, count: list(range(count)))
    assert decide_eq(d, 3, 3).holds
    assert not decide_eq(d, 3, 4).holds


# ============================================================
# validation
# ============================================================


def _bare_magma(op):
    return StructureInstance(kind=Kind.MAGMA, base=nat_dset(),
                             ops={"op": op}, name="test-magma")


def test_validate_accepts_wellformed_instance():
    validate_instance(nat_add_monoid())


def test_validate_rejects_missing_required_op():
    inst = StructureInstance(kind=Kind.MONOID, base=nat_dset(),
                             ops={"op": lambda a, b: a + b}, name="broken")
    with pytest.raises(StructuralError):
        validate_instance(inst)


def test_validate_rejects_unknown_role():
    inst = StructureInstance(kind=Kind.MAGMA, base=nat_dset(),
                             ops={"op": lambda a, b: a + b, "frobnicate": len},
                             name="extra")
    with pytest.raises(StructuralError):
        validate_instance(inst)


def test_validate_rejects_noncallable_op():
    inst = StructureInstance(kind=Kind.MAGMA, base=nat_dset(),
                             ops={"op": 7}, name="notcallable")
    with pytest.raises(StructuralError):
        validate_instance(inst)


def test_op_accessor_raises_on_absent_role():
    with pytest.raises(StructuralError):
        _bare_magma(lambda a, b: a + b).op("inverse")


# ============================================================
# law checking
# ============================================================


def test_lawful_monoid_reports_no_failures():
    report = check_laws(nat_add_monoid(), seed=1, budget=150)
    assert report.ok
    assert report.cases > 0
    assert not report.failures


def test_reports_are_deterministic_for_fixed_parameters():
    r1 = check_laws(nat_monus_semigroup(), seed=5, budget=80, sweep=4)
    r2 = check_laws(nat_monus_semigroup(), seed=5, budget=80, sweep=4)
    assert r1.cases == r2.cases
    assert r1.failures == r2.failures


def test_monus_associativity_counterexamples_are_found_and_recheckable():
    report = check_laws(nat_monus_semigroup(), seed=1, budget=100, sweep=6)
    assoc = [case for law, case in report.failures if law == "associativity(op)"]
    assert assoc, "truncated subtraction must fail associativity"
    for case in assoc[:10]:
        assert recheck_failure(nat_monus_semigroup(), "associativity(op)", case)


def test_monus_sweep_finds_the_small_triple():
    report = check_laws(nat_monus_semigroup(), seed=3, budget=10, sweep=6)
    assert ("associativity(op)", (5, 3, 1)) in report.failures


def test_noncommutative_op_fails_commutativity():
    inst = StructureInstance(
        kind=Kind.COMMUTATIVE_SEMIGROUP, base=nat_dset(),
        ops={"op": lambda a, b: a}, name="left-projection")
    report = check_laws(inst, seed=1, budget=60, sweep=3)
    laws = {law for law, _ in report.failures}
    assert "commutativity(op)" in laws


def test_broken_identity_is_detected():
    inst = StructureInstance(
        kind=Kind.MONOID, base=nat_dset(),
        ops={"op": lambda a, b: a + b, "identity": lambda: 1}, name="bad-e")
    report = check_laws(inst, seed=1, budget=60, sweep=3)
    assert any(law == "identity(op)" for law, _ in report.failures)


def test_congruence_violation_is_detected_via_variants():
    # Representative-sensitive op over a dset whose eq ignores sign: |x| pairs
    # (2, -2) are "equal" but the op result depends on the concrete value.
    def eq(a, b):
        return Decision.yes() if abs(a) == abs(b) else Decision.no((a, b))

    d = DSet(name="abs-int", eq=eq,
             sample=lambda seed, count: [((seed + i) % 7) - 3 for i in range(count)],
             enumeration=(0, 1, -1, 2, -2, 3, -3),
             variants=lambda x, rng: [-x])
    inst = StructureInstance(kind=Kind.MAGMA, base=d,
                             ops={"op": lambda a, b: a + b}, name="abs-add")
    report = check_laws(inst, seed=1, budget=80)
    assert any(law == "congruence(op)" for law, _ in report.failures)


def test_recheck_failure_rejects_unknown_law_name():
    with pytest.raises(StructuralError):
        recheck_failure(nat_add_monoid(), "no-such-law", (1, 2))


def test_recheck_of_a_passing_case_returns_false():
    # (0, 0, 0) associates fine even under monus
    assert not recheck_failure(nat_monus_semigroup(), "associativity(op)", (0, 0, 0))


# ============================================================
# derived instances
# ============================================================


def test_direct_product_of_groups_is_lawful():
    prod = direct_product(int_add_group(), int_add_group())
    assert prod.kind is Kind.COMMUTATIVE_GROUP
    assert check_laws(prod, seed=2, budget=80).ok


def test_direct_product_requires_matching_kinds():
    with pytest.raises(StructuralError):
        direct_product(int_add_group(), nat_add_monoid())


def test_direct_product_rejects_ring_kinds():
    with pytest.raises(StructuralError):
        direct_product(int_ring(), int_ring())


def test_view_ring_as_additive_group():
    grp = view_as(int_ring(), Kind.COMMUTATIVE_GROUP)
    assert grp.ops["op"](3, 4) == 7
    assert grp.ops["identity"]() == 0
    assert grp.ops["inverse"](5) == -5
    assert check_laws(grp, seed=1, budget=80).ok


def test_view_requires_an_ancestor_kind():
    with pytest.raises(StructuralError):
        view_as(nat_add_monoid(), Kind.GROUP)


def test_multiplicative_monoid_of_commutative_ring():
    m = multiplicative_monoid(int_ring())
    assert m.kind is Kind.COMMUTATIVE_MONOID
    assert m.ops["op"](6, 7) == 42
    assert m.ops["identity"]() == 1
    assert check_laws(m, seed=1, budget=80).ok


def test_law_failure_report_counts_cases():
    report = check_laws(nat_monus_semigroup(), seed=1, budget=50, sweep=4)
    assert report.cases >= len(report.failures)
    assert report.kind is Kind.SEMIGROUP
