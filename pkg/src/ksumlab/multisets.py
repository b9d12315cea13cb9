"""Number multisets, k-sum multiset generation, and affine normalization.

A multiset is stored as an ascending tuple of exact rationals, so multiset
equality is plain tuple equality and every derived quantity is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable

from .algebra import RationalLike

NumberMultiset = tuple[Fraction, ...]


class BadKError(ValueError):
    """k is outside 1..n for the given multiset."""


def as_multiset(values: Iterable[RationalLike]) -> NumberMultiset:
    """Sorted tuple of exact rationals; the canonical multiset form."""
    elements = tuple(sorted(Fraction(v) for v in values))
    if not elements:
        raise ValueError("a multiset needs at least one element")
    return elements


_ELEMENT = re.compile(r"^(-?\d+(?:/\d+)?)(?:\^(\d+))?$")


def parse_multiset(text: str) -> NumberMultiset:
    """Parse a set literal: integers or p/q, whitespace/comma separated.

    A token ``x^m`` repeats the element m times, e.g. ``0^10``.
    """
    values: list[Fraction] = []
    for token in re.split(r"[\s,]+", text.strip()):
        if not token:
            continue
        match = _ELEMENT.match(token)
        if match is None:
            raise ValueError(f"bad multiset element {token!r}")
        count = int(match.group(2)) if match.group(2) else 1
        if count < 1:
            raise ValueError(f"bad multiplicity in {token!r}")
        values.extend([Fraction(match.group(1))] * count)
    if not values:
        raise ValueError("empty multiset literal")
    return as_multiset(values)


def format_multiset(values: Iterable[RationalLike], run_length: bool = True) -> str:
    """Render a multiset; with run_length, repeats appear as ``x^m`` (m >= 2)."""
    elements = sorted(Fraction(v) for v in values)
    if not run_length:
        return " ".join(str(v) for v in elements)
    chunks: list[str] = []
    i = 0
    while i < len(elements):
        j = i
        while j < len(elements) and elements[j] == elements[i]:
            j += 1
        count = j - i
        chunks.append(str(elements[i]) if count == 1 else f"{elements[i]}^{count}")
        i = j
    return " ".join(chunks)


@dataclass(frozen=True)
class SumMultiset:
    """The multiset of all k-element sums of a source multiset."""

    sums: tuple[Fraction, ...]
    source_n: int
    source_k: int


def ksums(a: NumberMultiset, k: int) -> SumMultiset:
    """All C(n,k) sums over index-distinct k-subsets, kept with multiplicity."""
    n = len(a)
    if not 1 <= k <= n:
        raise BadKError(f"k must be in 1..{n}, got {k}")
    sums = sorted(sum(combo) for combo in combinations(a, k))
    return SumMultiset(tuple(sums), source_n=n, source_k=k)


def multiset_equal(x: SumMultiset, y: SumMultiset) -> bool:
    return x.sums == y.sums


def power_sum(a: NumberMultiset, p: int) -> Fraction:
    """Sum of p-th powers; p = 0 counts the elements."""
    if p < 0:
        raise ValueError(f"power must be >= 0, got {p}")
    if p == 0:
        return Fraction(len(a))
    return sum((x ** p for x in a), Fraction(0))


@dataclass(frozen=True)
class PowerSumVector:
    """Power sums of one multiset, 1-indexed: vector[p] is the p-th power sum."""

    values: tuple[Fraction, ...]

    def __getitem__(self, p: int) -> Fraction:
        if not 1 <= p <= len(self.values):
            raise IndexError(f"power sum index {p} outside 1..{len(self.values)}")
        return self.values[p - 1]

    @property
    def upto(self) -> int:
        return len(self.values)


def power_sum_vector(a: NumberMultiset, m: int) -> PowerSumVector:
    if m < 1:
        raise ValueError(f"need at least one entry, got m={m}")
    return PowerSumVector(tuple(power_sum(a, p) for p in range(1, m + 1)))


def affine_image(a: NumberMultiset, scale: RationalLike, shift: RationalLike) -> NumberMultiset:
    """The multiset {scale * x + shift}."""
    t, c = Fraction(scale), Fraction(shift)
    return as_multiset(t * x + c for x in a)


def normalize_affine(a: NumberMultiset) -> tuple[NumberMultiset, Fraction, Fraction]:
    """Canonical shift-and-scale representative of the affine orbit.

    Shifts so the element sum vanishes, then applies the unique positive
    scale making all entries integers with collective gcd 1 (an all-equal
    input collapses to all zeros, scale 1).  Returns (result, shift, scale)
    with result = {scale * (x + shift)}.
    """
    n = len(a)
    shift = -power_sum(a, 1) / n
    shifted = [x + shift for x in a]
    if all(x == 0 for x in shifted):
        return tuple(shifted), shift, Fraction(1)
    common_den = lcm(*(x.denominator for x in shifted))
    integers = [x * common_den for x in shifted]
    common_gcd = gcd(*(int(v) for v in integers))
    scale = Fraction(common_den, common_gcd)
    return as_multiset(x * scale for x in shifted), shift, scale


def canonical_orbit(a: NumberMultiset) -> NumberMultiset:
    """Orbit representative under shift, positive scale, and reflection.

    After normalize_affine, the sorted list is replaced by its negated-and-
    sorted counterpart whenever the latter is lexicographically smaller.
    """
    rep, _, _ = normalize_affine(a)
    reflected = as_multiset(-x for x in rep)
    return min(rep, reflected)
