"""Equation proving by normalization in three free theories.

monoid: terms over one associative op with identity normalize to words.
semiring: non-commutative multiplication, commutative addition, natural
number coefficients; normal forms are coefficiented word sums.
commsemiring: commutative multiplication; normal forms are coefficiented
monomial sums (monomials sorted by degree then lexicographically).

prove_eq answers Yes exactly when both normal forms coincide, which for
these free theories is provability. Fuel-bounded iteration utilities live
here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import StructuralError
from .structures import Decision


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class NatConst:
    value: int


@dataclass(frozen=True, slots=True)
class UnitConst:
    """The monoid identity symbol."""


@dataclass(frozen=True, slots=True)
class Apply:
    op: str
    left: "Term"
    right: "Term"


Term = Union[Var, NatConst, UnitConst, Apply]

THEORIES = ("monoid", "semiring", "commsemiring")


@dataclass(frozen=True)
class NormalForm:
    theory: str
    body: tuple

    def __str__(self):
        if self.theory == "monoid":
            return "*".join(self.body) if self.body else "e"
        parts = []
        for key, coeff in self.body:
            word = "*".join(key)
            if not word:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(word)
            else:
                parts.append(f"{coeff}*{word}")
        return " + ".join(parts) if parts else "0"


def _check_theory(theory: str):
    if theory not in THEORIES:
        raise StructuralError(f"unknown theory {theory!r}")


def _monoid_word(t: Term) -> tuple:
    if isinstance(t, Var):
        return (t.name,)
    if isinstance(t, UnitConst):
        return ()
    if isinstance(t, Apply):
        if t.op != "*":
            raise StructuralError(f"operator {t.op!r} outside the monoid theory")
        return _monoid_word(t.left) + _monoid_word(t.right)
    raise StructuralError("numerals do not belong to the monoid theory")


def _poly(t: Term, commutative: bool) -> dict:
    """Polynomial with natural coefficients, keyed by word or by sorted
    monomial depending on commutativity."""
    if isinstance(t, Var):
        return {(t.name,): 1}
    if isinstance(t, NatConst):
        if t.value < 0:
            raise StructuralError("semiring constants are naturals")
        return {(): t.value} if t.value else {}
    if isinstance(t, UnitConst):
        raise StructuralError("the identity symbol belongs to the monoid theory")
    if isinstance(t, Apply):
        lp = _poly(t.left, commutative)
        rp = _poly(t.right, commutative)
        if t.op == "+":
            out = dict(lp)
            for k, c in rp.items():
                out[k] = out.get(k, 0) + c
            return out
        if t.op == "*":
            out = {}
            for k1, c1 in lp.items():
                for k2, c2 in rp.items():
                    key = tuple(sorted(k1 + k2)) if commutative else k1 + k2
                    out[key] = out.get(key, 0) + c1 * c2
            return out
        raise StructuralError(f"operator {t.op!r} outside the semiring theories")
    raise StructuralError(f"unsupported term {t!r}")


def normalize(theory: str, t: Term) -> NormalForm:
    _check_theory(theory)
    if theory == "monoid":
        return NormalForm("monoid", _monoid_word(t))
    commutative = theory == "commsemiring"
    poly = _poly(t, commutative)
    if commutative:
        body = tuple(sorted(poly.items(), key=lambda kv: (len(kv[0]), kv[0])))
    else:
        body = tuple(sorted(poly.items(), key=lambda kv: kv[0]))
    return NormalForm(theory, body)


def embed(nf: NormalForm) -> Term:
    """Re-embed a normal form as a term (left-associated chains)."""

    def product(names) -> Term:
        if not names:
            return UnitConst() if nf.theory == "monoid" else NatConst(1)
        acc: Term = Var(names[0])
        for name in names[1:]:
            acc = Apply("*", acc, Var(name))
        return acc

    if nf.theory == "monoid":
        return product(nf.body)
    terms = []
    for key, coeff in nf.body:
        if not key:
            terms.append(NatConst(coeff))
        elif coeff == 1:
            terms.append(product(key))
        else:
            terms.append(Apply("*", NatConst(coeff), product(key)))
    if not terms:
        return NatConst(0)
    acc = terms[0]
    for t in terms[1:]:
        acc = Apply("+", acc, t)
    return acc


def prove_eq(theory: str, lhs: Term, rhs: Term) -> Decision:
    nl = normalize(theory, lhs)
    nr = normalize(theory, rhs)
    if nl == nr:
        return Decision.yes((nl, nr))
    return Decision.no((nl, nr))


def term_vars(t: Term) -> set:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Apply):
        return term_vars(t.left) | term_vars(t.right)
    return set()


# ---------------------------------------------------------------------------
# evaluation models


def eval_nat(t: Term, env: dict) -> int:
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, NatConst):
        return t.value
    if isinstance(t, Apply):
        l, r = eval_nat(t.left, env), eval_nat(t.right, env)
        return l + r if t.op == "+" else l * r
    raise StructuralError(f"cannot evaluate {t!r} into naturals")


def eval_word(t: Term, env: dict) -> tuple:
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, UnitConst):
        return ()
    if isinstance(t, Apply) and t.op == "*":
        return eval_word(t.left, env) + eval_word(t.right, env)
    raise StructuralError(f"cannot evaluate {t!r} into words")


def _mat_add(a, b):
    return ((a[0][0] + b[0][0], a[0][1] + b[0][1]),
            (a[1][0] + b[1][0], a[1][1] + b[1][1]))


def _mat_mul(a, b):
    return ((a[0][0] * b[0][0] + a[0][1] * b[1][0],
             a[0][0] * b[0][1] + a[0][1] * b[1][1]),
            (a[1][0] * b[0][0] + a[1][1] * b[1][0],
             a[1][0] * b[0][1] + a[1][1] * b[1][1]))


_MAT_ZERO = ((0, 0), (0, 0))
_MAT_ONE = ((1, 0), (0, 1))

# small non-commuting generators for refuting non-commutative claims
MAT_CANDIDATES = (
    _MAT_ONE,
    ((1, 1), (0, 1)),
    ((1, 0), (1, 1)),
    ((0, 1), (0, 0)),
    ((0, 0), (1, 0)),
    ((1, 0), (0, 0)),
    ((2, 0), (0, 1)),
)


def eval_mat2(t: Term, env: dict):
    """Evaluate into 2x2 natural matrices, a semiring where multiplication
    does not commute."""
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, NatConst):
        acc = _MAT_ZERO
        for _ in range(t.value):
            acc = _mat_add(acc, _MAT_ONE)
        return acc
    if isinstance(t, Apply):
        l, r = eval_mat2(t.left, env), eval_mat2(t.right, env)
        return _mat_add(l, r) if t.op == "+" else _mat_mul(l, r)
    raise StructuralError(f"cannot evaluate {t!r} into matrices")


# ---------------------------------------------------------------------------
# fuel


@dataclass(frozen=True, slots=True)
class Finite:
    remaining: int


@dataclass(frozen=True, slots=True)
class PracticallyInfinite:
    """Symbolic unbounded fuel: never exhausts, counts steps taken."""

    steps_taken: int = 0


Fuel = Union[Finite, PracticallyInfinite]


@dataclass(frozen=True, slots=True)
class Completed:
    result: object
    fuel_left: Fuel


@dataclass(frozen=True, slots=True)
class Exhausted:
    state: object


def with_fuel(fuel: Fuel, step: Callable, halted: Callable, s0):
    """Apply step until halted or the fuel runs out. Finite fuel decrements
    strictly per step; PracticallyInfinite only counts."""
    state = s0
    if isinstance(fuel, Finite):
        n = fuel.remaining
        while True:
            if halted(state):
                return Completed(state, Finite(n))
            if n == 0:
                return Exhausted(state)
            state = step(state)
            n -= 1
    k = fuel.steps_taken
    while not halted(state):
        state = step(state)
        k += 1
    return Completed(state, PracticallyInfinite(k))
