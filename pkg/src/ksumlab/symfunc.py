"""Symmetric-function machinery over exact rationals.

Three layers, each checked against the one below by direct evaluation:

* monomial power sums ``S_{p1,...,pj}`` (sums over ordered tuples of
  distinct indices) and their recursive rewriting into polynomials in the
  plain power sums S_1, S_2, ...;
* reduction of S_m for m > n to a polynomial in S_1..S_n, valid for every
  n-element multiset, derived from Newton's identities through the
  elementary symmetric functions vanishing beyond degree n;
* the expansion of E_p, the p-th power sum of the k-sum multiset, as a
  polynomial identity in S_1..S_p.

All symbolic results are memoized; they are pure values and safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Iterable, Sequence

from .algebra import Poly, RationalLike, Var, svar
from .multisets import NumberMultiset, PowerSumVector, ksums, power_sum

Composition = tuple[int, ...]


class TooManyPartsError(ValueError):
    """A monomial power sum with more parts than the multiset has elements."""


class BadRangeError(ValueError):
    """An index argument outside its documented range."""


def composition(parts: Iterable[int]) -> Composition:
    """Canonical composition: zero parts dropped, remainder sorted descending."""
    kept = sorted((p for p in parts if p != 0), reverse=True)
    if any(p < 0 for p in kept):
        raise ValueError(f"negative part in {tuple(parts)}")
    if not kept:
        raise ValueError("composition needs at least one positive part")
    return tuple(kept)


def monomial_power_sum_direct(a: NumberMultiset, parts: Iterable[int]) -> Fraction:
    """Sum over all ordered tuples of distinct indices of the prescribed powers.

    The brute-force ground truth that anchors the symbolic layer.
    """
    c = composition(parts)
    if len(c) > len(a):
        raise TooManyPartsError(f"{len(c)} parts but only {len(a)} elements")
    total = Fraction(0)
    for chosen in permutations(a, len(c)):
        term = Fraction(1)
        for value, exp in zip(chosen, c):
            term *= value ** exp
        total += term
    return total


@lru_cache(maxsize=None)
def _reduce_monomial(c: Composition) -> Poly:
    if len(c) == 1:
        return Poly.variable(svar(c[0]))
    head, last = c[:-1], c[-1]
    result = _reduce_monomial(head) * Poly.variable(svar(last))
    for t in range(len(head)):
        merged = composition(head[:t] + (head[t] + last,) + head[t + 1:])
        result = result - _reduce_monomial(merged)
    return result


def reduce_monomial(parts: Iterable[int]) -> Poly:
    """Rewrite a monomial power sum as a polynomial in S_1, S_2, ...

    Repeatedly splits off the smallest part: the product with the matching
    plain power sum overcounts exactly by the sums where two indices
    coincide, one merged term per remaining part.
    """
    return _reduce_monomial(composition(parts))


@lru_cache(maxsize=None)
def elementary_in_power_sums(j: int) -> Poly:
    """The j-th elementary symmetric function as a polynomial in S_1..S_j."""
    if j < 0:
        raise BadRangeError(f"elementary index must be >= 0, got {j}")
    if j == 0:
        return Poly.const(1)
    acc = Poly.zero()
    for i in range(1, j + 1):
        term = elementary_in_power_sums(j - i) * Poly.variable(svar(i))
        acc = acc + term if i % 2 == 1 else acc - term
    return acc / j


@lru_cache(maxsize=None)
def macmahon_reduce(m: int, n: int) -> Poly:
    """S_m for m > n as a polynomial in S_1..S_n, an identity for n elements.

    Every element is a root of the degree-n polynomial with the elementary
    symmetric functions as coefficients, so S_m satisfies the induced linear
    recurrence; reductions of smaller high indices are substituted as they
    are produced.
    """
    if n < 1 or m <= n:
        raise BadRangeError(f"need m > n >= 1, got m={m}, n={n}")
    acc = Poly.zero()
    for j in range(1, n + 1):
        lower = m - j
        tail = Poly.variable(svar(lower)) if lower <= n else macmahon_reduce(lower, n)
        term = elementary_in_power_sums(j) * tail
        acc = acc + term if j % 2 == 1 else acc - term
    return acc


def reduce_high_powers(poly: Poly, n: int) -> Poly:
    """Substitute every S_m with m > n by its reduction to S_1..S_n."""
    high = {
        var: macmahon_reduce(var.index, n)
        for var in poly.variables()
        if var.family == "S" and var.index > n
    }
    if not high:
        return poly
    return poly.substitute(high)


def newton_extend(powersums: Sequence[RationalLike], n: int, upto: int) -> list[Fraction]:
    """Extend numeric power sums S_1..S_n of an n-element multiset up to S_upto.

    Returns the list [S_1, ..., S_upto].  Numeric twin of macmahon_reduce,
    using the same recurrence on values instead of polynomials.
    """
    if len(powersums) < n:
        raise BadRangeError(f"need S_1..S_{n}, got only {len(powersums)} entries")
    s = [Fraction(0)] + [Fraction(v) for v in powersums]  # s[p] = S_p
    elem = [Fraction(1)]  # elem[j] = j-th elementary symmetric value
    for j in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, j + 1):
            term = elem[j - i] * s[i]
            acc = acc + term if i % 2 == 1 else acc - term
        elem.append(acc / j)
    for m in range(len(s), upto + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            term = elem[j] * s[m - j]
            acc = acc + term if j % 2 == 1 else acc - term
        s.append(acc)
    return s[1:upto + 1]


def _partitions(total: int, max_parts: int, max_value: int) -> Iterable[Composition]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_value), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            yield (first, *rest)


def partitions_max_parts(total: int, max_parts: int) -> list[Composition]:
    """All partitions of ``total`` into at most ``max_parts`` positive parts."""
    return list(_partitions(total, max_parts, total))


def _multinomial(total: int, parts: Composition) -> int:
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def _multiplicity_factorial(parts: Composition) -> int:
    counts: dict[int, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    result = 1
    for c in counts.values():
        result *= factorial(c)
    return result


@lru_cache(maxsize=None)
def e_expansion(p: int, k: int, n: int, set_s1_zero: bool) -> Poly:
    """E_p, the p-th power sum of the k-sum multiset, as a polynomial in S_1..S_p.

    Expanding the p-th power of a k-term sum over all ordered index tuples
    groups by the partition of p carried by the nonzero exponents; a
    partition with j distinct index slots occurs alongside C(n-j, k-j)
    choices for the unused slots.  The monomial power sums are then rewritten
    via reduce_monomial.  High indices S_m (m > n) are left as-is; callers
    that need an identity in S_1..S_n apply reduce_high_powers.
    """
    if p < 1:
        raise BadRangeError(f"power must be >= 1, got {p}")
    if not 1 <= k <= n:
        raise BadRangeError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = Poly.zero()
    for partition in _partitions(p, k, p):
        j = len(partition)
        coeff = Fraction(
            _multinomial(p, partition) * comb(n - j, k - j),
            _multiplicity_factorial(partition),
        )
        total = total + reduce_monomial(partition) * coeff
    if set_s1_zero:
        total = total.substitute({svar(1): Poly.zero()})
    return total


def e_power_sums(a: NumberMultiset, k: int, pmax: int) -> PowerSumVector:
    """E_1..E_pmax computed directly from the k-sum multiset: the ground truth."""
    sums = ksums(a, k).sums
    return PowerSumVector(tuple(power_sum(sums, p) for p in range(1, pmax + 1)))


def identity_fixture_lines(pmax: int = 14, k: int = 4, n: int = 12) -> list[str]:
    """Fixture rendering of the S_1 = 0 expansions: one ``E<p> = ...`` per line."""
    return [f"E{p} = {e_expansion(p, k, n, True).render()}" for p in range(1, pmax + 1)]


def load_identity_fixtures(lines: Iterable[str]) -> dict[int, Poly]:
    """Parse fixture lines back into {p: polynomial}; '#' lines are comments."""
    out: dict[int, Poly] = {}
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, body = line.partition("=")
        name = name.strip()
        if not name.startswith("E") or not name[1:].isdigit():
            raise ValueError(f"bad fixture line {line!r}")
        out[int(name[1:])] = Poly.parse(body.strip())
    return out
