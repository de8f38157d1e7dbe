"""List certificates: multisets keyed by decidable equality, merge sort
returning an order certificate plus a permutation witness, and the
append-based reversal functions used by the lemma corpus.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import StructuralError
from .structures import DSet, Decision, StructureInstance


@dataclass(frozen=True)
class Multiset:
    """Association list of (key, count); keys pairwise distinct under the
    carrier's equality, counts >= 1."""

    dset: DSet
    entries: tuple


def mset_of_list(dset: DSet, xs) -> Multiset:
    eq = dset.eq
    entries = []
    for x in xs:
        for i, (k, c) in enumerate(entries):
            if eq(k, x).holds:
                entries[i] = (k, c + 1)
                break
        else:
            entries.append((x, 1))
    return Multiset(dset, tuple(entries))


def mset_sum(a: Multiset, b: Multiset) -> Multiset:
    if a.dset is not b.dset:
        raise StructuralError("multisets over different carriers")
    eq = a.dset.eq
    entries = list(a.entries)
    for k2, c2 in b.entries:
        for i, (k1, c1) in enumerate(entries):
            if eq(k1, k2).holds:
                entries[i] = (k1, c1 + c2)
                break
        else:
            entries.append((k2, c2))
    return Multiset(a.dset, tuple(entries))


def mset_eq(a: Multiset, b: Multiset) -> bool:
    if a.dset is not b.dset:
        raise StructuralError("multisets over different carriers")
    if len(a.entries) != len(b.entries):
        return False
    eq = a.dset.eq
    used = [False] * len(b.entries)
    for k1, c1 in a.entries:
        for i, (k2, c2) in enumerate(b.entries):
            if not used[i] and eq(k1, k2).holds:
                if c1 != c2:
                    return False
                used[i] = True
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# certified sorting


@dataclass(frozen=True)
class DecTotalOrder:
    base: DSet
    leq: Callable[[object, object], Decision]


@dataclass(frozen=True)
class SortResult:
    """ys sorted output; ord_cert holds the adjacent-pair order decisions;
    perm maps input positions to output positions (ys[perm[i]] is xs[i])."""

    ys: tuple
    ord_cert: tuple
    perm: tuple


def sort_certified(dto: DecTotalOrder, xs) -> SortResult:
    """Stable merge sort; ties keep the earlier input index first."""
    leq = dto.leq
    items = [(x, i) for i, x in enumerate(xs)]

    def merge_sort(seq):
        if len(seq) <= 1:
            return seq
        mid = len(seq) // 2
        left = merge_sort(seq[:mid])
        right = merge_sort(seq[mid:])
        out = []
        i = j = 0
        while i < len(left) and j < len(right):
            if leq(left[i][0], right[j][0]).holds:
                out.append(left[i])
                i += 1
            else:
                out.append(right[j])
                j += 1
        out.extend(left[i:])
        out.extend(right[j:])
        return out

    ordered = merge_sort(items)
    ys = tuple(x for x, _ in ordered)
    perm = [0] * len(xs)
    for out_pos, (_, in_pos) in enumerate(ordered):
        perm[in_pos] = out_pos
    ord_cert = tuple(leq(ys[i], ys[i + 1]) for i in range(len(ys) - 1))
    return SortResult(ys, ord_cert, tuple(perm))


def verify_sort_result(dto: DecTotalOrder, xs, result: SortResult) -> bool:
    """Independent re-check: permutation is a bijection carrying the input
    onto ys, adjacent pairs re-decide as ordered, and element counts match."""
    xs = list(xs)
    ys = result.ys
    perm = result.perm
    n = len(xs)
    if len(ys) != n or len(perm) != n:
        return False
    if len(result.ord_cert) != max(n - 1, 0):
        return False
    if sorted(perm) != list(range(n)):
        return False
    eq = dto.base.eq
    for i, x in enumerate(xs):
        if not eq(ys[perm[i]], x).holds:
            return False
    leq = dto.leq
    for i in range(n - 1):
        if not result.ord_cert[i].holds:
            return False
        if not leq(ys[i], ys[i + 1]).holds:
            return False
    try:
        if Counter(xs) != Counter(ys):
            return False
    except TypeError:
        if not mset_eq(mset_of_list(dto.base, xs), mset_of_list(dto.base, ys)):
            return False
    return True


@lru_cache(maxsize=None)
def int_order() -> DecTotalOrder:
    from .numbers import int_dset

    def leq(a, b):
        return Decision.yes((a, b)) if a <= b else Decision.no((a, b))

    return DecTotalOrder(int_dset(), leq)


@lru_cache(maxsize=None)
def fraction_order() -> DecTotalOrder:
    """Order on canonical fractions; denominators are positive, so the
    cross-multiplied comparison needs no sign care."""
    from .fractions import fraction_field

    field = fraction_field()

    def leq(a, b):
        return (Decision.yes((a, b)) if a.num * b.den <= b.num * a.den
                else Decision.no((a, b)))

    return DecTotalOrder(field.base, leq)


# ---------------------------------------------------------------------------
# reversal via repeated append


def append(xs: list, ys: list) -> list:
    return list(xs) + list(ys)


def rev(xs: list) -> list:
    """Reverse by appending the head onto the reversed tail."""
    if not xs:
        return []
    return append(rev(xs[1:]), [xs[0]])
