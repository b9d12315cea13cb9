"""Polynomial kernel: exact arithmetic, ordering, rendering, parsing."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ksumlab.algebra import (
    Monomial,
    Poly,
    UnboundVariableError,
    Var,
    evar,
    parse_rational,
    svar,
)


def test_var_ordering_s_family_first():
    assert svar(1) < svar(2) < svar(14)
    assert svar(14) < evar(1) < evar(2)
    assert str(svar(2)) == "S2"
    assert str(evar(14)) == "E14"


def test_var_validation():
    with pytest.raises(ValueError):
        svar(0)
    with pytest.raises(ValueError):
        Var("X", 1)


def test_monomial_product_and_power():
    m = Monomial({svar(2): 1}) * Monomial({svar(2): 2, svar(4): 1})
    assert m == Monomial({svar(2): 3, svar(4): 1})
    assert m.degree == 4
    assert (Monomial({svar(3): 1}) ** 2) == Monomial({svar(3): 2})
    assert Monomial({}).degree == 0


def test_monomial_graded_lex_order():
    # higher total degree first; ties broken by the earlier variable
    # carrying the higher exponent
    s2cubed = Monomial({svar(2): 3})
    s2s4 = Monomial({svar(2): 1, svar(4): 1})
    s3sq = Monomial({svar(3): 2})
    assert s2cubed > s2s4 > s3sq
    assert sorted([s3sq, s2cubed, s2s4], reverse=True) == [s2cubed, s2s4, s3sq]


def test_poly_additive_identities():
    p = Poly.parse("40*S3^2 - 7*S2")
    assert p + Poly.zero() == p
    assert p - p == Poly.zero()
    assert Poly.parse("40*S3^2") + Poly.parse("-40*S3^2") == Poly.zero()


def test_poly_products():
    p = Poly.parse("3*S2 + 1/2*E1")
    assert p * Poly.const(1) == p
    assert Poly.variable(svar(1)) * Poly.variable(svar(1)) == Poly.parse("S1^2")
    lhs = Poly.parse("S2 + S3") * Poly.parse("S2 - S3")
    assert lhs == Poly.parse("S2^2 - S3^2")


def test_degree_adds_over_products():
    p = Poly.parse("S2*S4 + S3")
    q = Poly.parse("2*S2^2")
    assert (p * q).degree() == p.degree() + q.degree()
    assert Poly.zero().degree() == -1


def test_scalar_division_and_power():
    p = Poly.parse("3*S2") / 6
    assert p == Poly.parse("1/2*S2")
    assert Poly.parse("S1 + 1") ** 2 == Poly.parse("S1^2 + 2*S1 + 1")
    assert Poly.parse("S1 + 1") ** 0 == Poly.const(1)


def test_substitute_inverts_identity():
    e2 = Poly.variable(evar(2))
    assert Poly.parse("120*S2").substitute({svar(2): e2 / 120}) == e2


def test_substitute_empty_and_unbound_pass_through():
    p = Poly.parse("120*S2 + 45*S1^2")
    assert p.substitute({}) == p
    assert p.substitute({svar(1): 0}) == Poly.parse("120*S2")
    assert p.substitute({evar(9): Poly.zero()}) == p


def test_evaluate_examples():
    assert Poly.parse("120*S2").evaluate({svar(2): 2}) == 240
    assert Poly.zero().evaluate({}) == 0
    assert Poly.parse("S3^2 - S6").evaluate({svar(3): 3, svar(6): 9}) == 0


def test_evaluate_requires_all_variables():
    with pytest.raises(UnboundVariableError):
        Poly.parse("S3^2 - S6").evaluate({svar(3): 3})


def test_render_canonical_order():
    p = Poly.parse("40*S3^2 + 90*S2^3 - 120*S2*S4")
    assert p.render() == "90*S2^3 - 120*S2*S4 + 40*S3^2"
    assert Poly.zero().render() == "0"
    assert Poly.parse("-1/2*S1^3 + 3/2*S1*S2").render() == "-1/2*S1^3 + 3/2*S1*S2"


def test_parse_rejects_garbage():
    for bad in ("S", "2S", "S2 +", "S2 ** 2", "1.5*S2", ""):
        with pytest.raises(ValueError):
            Poly.parse(bad)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == -7
    with pytest.raises(ValueError):
        parse_rational("x")


_VARS = [svar(1), svar(2), svar(3), evar(1), evar(2)]


@st.composite
def polys(draw):
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        exponents = {
            v: draw(st.integers(1, 3))
            for v in draw(st.sets(st.sampled_from(_VARS), max_size=3))
        }
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
        mono = Monomial(exponents)
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return Poly(terms)


def env_for(*ps: Poly) -> st.SearchStrategy:
    return st.fixed_dictionaries(
        {v: st.fractions(max_denominator=7) for v in set().union(*(p.variables() for p in ps)) or set()}
    )


@settings(max_examples=120, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_evaluate_is_multiplicative(data):
    p = data.draw(polys())
    q = data.draw(polys())
    env = data.draw(env_for(p, q))
    assert (p * q).evaluate(env) == p.evaluate(env) * q.evaluate(env)
    assert (p + q).evaluate(env) == p.evaluate(env) + q.evaluate(env)


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_substitute_commutes_with_evaluate(data):
    p = data.draw(polys())
    replacement = data.draw(polys())
    target = svar(2)
    env = data.draw(env_for(p, replacement, Poly.variable(target)))
    substituted = p.substitute({target: replacement})
    indirect = dict(env)
    indirect[target] = replacement.evaluate(env)
    assert substituted.evaluate(env) == p.evaluate(indirect)


@settings(max_examples=120, deadline=None)
@given(polys())
def test_render_parse_round_trip(p):
    assert Poly.parse(p.render()) == p


@settings(max_examples=120, deadline=None)
@given(polys())
def test_coefficients_stay_canonical(p):
    for mono, coeff in p.terms.items():
        assert coeff != 0
        assert coeff.denominator > 0
        assert gcd(coeff.numerator, coeff.denominator) == 1
