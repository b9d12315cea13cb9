"""Exact sparse multivariate polynomial arithmetic over the rationals.

Coefficients are `fractions.Fraction` throughout, so every operation is
exact: no rounding ever happens and equality of polynomials is equality of
their canonical term maps.  Variables come in two indexed families, ``S``
and ``E`` (power sums of a base multiset and of its k-sum multiset); the
variable order puts every S before every E, then sorts by index.  Monomials
are compared in graded lexicographic order on that variable order, which
fixes a canonical rendering: terms in descending monomial order,
coefficients printed as ``num/den`` (denominator omitted when 1),
exponents as ``^k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Mapping, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

S_FAMILY = "S"
E_FAMILY = "E"
_FAMILY_RANK = {S_FAMILY: 0, E_FAMILY: 1}


class UnboundVariableError(KeyError):
    """Raised when evaluating a polynomial with an unbound variable."""


@total_ordering
@dataclass(frozen=True)
class Var:
    """An indexed formal variable, one of the families S1, S2, ... / E1, E2, ..."""

    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILY_RANK:
            raise ValueError(f"unknown variable family {self.family!r}")
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")

    def sort_key(self) -> tuple[int, int]:
        return (_FAMILY_RANK[self.family], self.index)

    def __lt__(self, other: "Var") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    def __repr__(self) -> str:
        return f"Var({self.family}{self.index})"


def svar(index: int) -> Var:
    return Var(S_FAMILY, index)


def evar(index: int) -> Var:
    return Var(E_FAMILY, index)


@total_ordering
class Monomial:
    """A product of variable powers; zero exponents are never stored.

    Total order: graded lexicographic.  Degree decides first; ties are
    broken by the exponent vectors read along increasing variables, the
    larger exponent on the earlier variable winning.
    """

    __slots__ = ("pairs", "degree", "_hash")

    def __init__(self, exponents: Mapping[Var, int] | Iterable[tuple[Var, int]] = ()):
        items = dict(exponents)
        for var, exp in items.items():
            if exp < 0:
                raise ValueError(f"negative exponent {exp} for {var}")
        self.pairs: tuple[tuple[Var, int], ...] = tuple(
            sorted(((v, e) for v, e in items.items() if e > 0), key=lambda p: p[0].sort_key())
        )
        self.degree: int = sum(e for _, e in self.pairs)
        self._hash = hash(self.pairs)

    def exponent(self, var: Var) -> int:
        for v, e in self.pairs:
            if v == var:
                return e
        return 0

    def variables(self) -> tuple[Var, ...]:
        return tuple(v for v, _ in self.pairs)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.pairs)
        for v, e in other.pairs:
            merged[v] = merged.get(v, 0) + e
        return Monomial(merged)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative monomial power")
        return Monomial({v: e * n for v, e in self.pairs})

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.pairs == other.pairs

    def __lt__(self, other: "Monomial") -> bool:
        if self.degree != other.degree:
            return self.degree < other.degree
        mine = dict(self.pairs)
        theirs = dict(other.pairs)
        for var in sorted(set(mine) | set(theirs)):
            a, b = mine.get(var, 0), theirs.get(var, 0)
            if a != b:
                # higher exponent on the earlier variable => larger monomial
                return a < b
        return False

    def __str__(self) -> str:
        if not self.pairs:
            return "1"
        return "*".join(f"{v}^{e}" if e > 1 else str(v) for v, e in self.pairs)

    def __repr__(self) -> str:
        return f"Monomial({self})"


_EMPTY_MONOMIAL = Monomial()


class Poly:
    """A sparse polynomial: a canonical map from monomials to nonzero rationals.

    Instances are immutable by convention; all operators return new objects.
    The zero polynomial has an empty term map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, RationalLike] = ()):
        canonical: dict[Monomial, Fraction] = {}
        for mono, coeff in dict(terms).items():
            q = Fraction(coeff)
            if q:
                canonical[mono] = q
        self.terms: dict[Monomial, Fraction] = canonical

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, value: RationalLike) -> "Poly":
        return cls({_EMPTY_MONOMIAL: Fraction(value)})

    @classmethod
    def variable(cls, var: Var) -> "Poly":
        return cls({Monomial({var: 1}): Fraction(1)})

    @classmethod
    def term(cls, coeff: RationalLike, exponents: Mapping[Var, int]) -> "Poly":
        return cls({Monomial(exponents): Fraction(coeff)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents: Monomial | Mapping[Var, int]) -> Fraction:
        mono = exponents if isinstance(exponents, Monomial) else Monomial(exponents)
        return self.terms.get(mono, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get(_EMPTY_MONOMIAL, Fraction(0))

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(m.degree for m in self.terms)

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for mono in self.terms:
            out.update(mono.variables())
        return out

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value: "Poly" | RationalLike) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly.const(value)
        raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")

    def __add__(self, other: "Poly" | RationalLike) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly" | RationalLike) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Poly" | RationalLike) -> "Poly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "Poly" | RationalLike) -> "Poly":
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Poly({m: c * q for m, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> "Poly":
        q = Fraction(scalar)
        if not q:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return self * (1 / q)

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, bindings: Mapping[Var, "Poly" | RationalLike]) -> "Poly":
        """Replace bound variables by polynomials and re-expand.

        Unbound variables pass through unchanged.
        """
        coerced = {v: self._coerce(p) for v, p in bindings.items()}
        power_cache: dict[tuple[Var, int], Poly] = {}

        def bound_power(var: Var, exp: int) -> Poly:
            key = (var, exp)
            if key not in power_cache:
                power_cache[key] = coerced[var] ** exp
            return power_cache[key]

        total = Poly.zero()
        for mono, coeff in self.terms.items():
            factor = Poly.const(coeff)
            passthrough: dict[Var, int] = {}
            for var, exp in mono.pairs:
                if var in coerced:
                    factor = factor * bound_power(var, exp)
                else:
                    passthrough[var] = exp
            if passthrough:
                factor = factor * Poly.term(1, passthrough)
            total = total + factor
        return total

    def evaluate(self, values: Mapping[Var, RationalLike]) -> Fraction:
        """Exact value of the polynomial; every variable must be bound."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for var, exp in mono.pairs:
                if var not in values:
                    raise UnboundVariableError(f"no value bound for {var}")
                term *= Fraction(values[var]) ** exp
            total += term
        return total

    # -- rendering and parsing ---------------------------------------------

    def render(self) -> str:
        """Canonical text form, terms in descending monomial order."""
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            magnitude = _term_text(mono, abs(coeff))
            if not chunks:
                chunks.append(magnitude if coeff > 0 else f"-{magnitude}")
            else:
                chunks.append(f"{'+' if coeff > 0 else '-'} {magnitude}")
        return " ".join(chunks)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return _parse_poly(text)

    def __repr__(self) -> str:
        return f"Poly({self.render()})"


def _term_text(mono: Monomial, coeff: Fraction) -> str:
    if not mono.pairs:
        return str(coeff)
    if coeff == 1:
        return str(mono)
    return f"{coeff}*{mono}"


_TOKEN = re.compile(r"\s*(?:(\d+/\d+)|(\d+)|([SE]\d+)|(\^)|(\*)|(\+)|(-))")


def _parse_poly(text: str) -> Poly:
    """Parse the canonical rendering back into a polynomial."""
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip():
                raise ValueError(f"cannot parse polynomial near {text[pos:pos + 20]!r}")
            break
        tokens.append(match.group(match.lastindex))
        pos = match.end()
    if not tokens:
        raise ValueError("empty polynomial text")

    result = Poly.zero()
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in polynomial text")
        coeff = Fraction(1)
        exponents: dict[Var, int] = {}
        saw_factor = False
        while True:
            tok = tokens[i]
            if tok[0] in "SE" and not tok[0].isdigit():
                var = Var(tok[0], int(tok[1:]))
                exp = 1
                if i + 1 < n and tokens[i + 1] == "^":
                    exp = int(tokens[i + 2])
                    i += 2
                exponents[var] = exponents.get(var, 0) + exp
            else:
                coeff *= Fraction(tok)
            saw_factor = True
            i += 1
            if i < n and tokens[i] == "*":
                i += 1
                continue
            break
        if not saw_factor:
            raise ValueError("empty term in polynomial text")
        result = result + Poly.term(sign * coeff, exponents)
    return result


def parse_rational(text: str) -> Fraction:
    """Parse an integer or a ``p/q`` literal into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc
