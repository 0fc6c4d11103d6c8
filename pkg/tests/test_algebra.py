from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbstab.algebra import (
    HomogeneityError,
    Ideal,
    Polynomial,
    format_polynomial,
    grevlex_key,
    homogeneous_degree,
    poly_arithmetic,
)
from hilbstab.parser import ParseError, parse_polynomial


def P(text, n=3):
    return parse_polynomial(text, n)


def test_parse_conic():
    assert P("x0*x2 - x1^2").terms == {(1, 0, 1): 1, (0, 2, 0): -1}


def test_parse_rational_coefficient():
    assert P("2/3*x1*x2 + x0^2").terms == {(2, 0, 0): 1, (0, 1, 1): Fraction(2, 3)}


@pytest.mark.parametrize("text, position", [
    ("x3", 0),
    ("x0 + x3*x1", 5),
    ("x0^-1", 3),
    ("x0 * ", 5),
    ("x0 + (x1", 8),
    ("x0 $ x1", 3),
    ("x0 / x1", 3),
    ("", 0),
])
def test_parse_errors_are_positioned(text, position):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.position == position


def test_parse_negative_exponent_message():
    with pytest.raises(ParseError, match="negative exponent"):
        P("x1^-2")


def test_parse_precedence_and_unary():
    assert P("-x0^2") == -P("x0*x0")
    assert P("(x0 + x1)^2") == P("x0^2 + 2*x0*x1 + x1^2")
    assert P("x0*-x1") == -P("x0*x1")
    assert P("3/6") == Polynomial.constant(Fraction(1, 2), 3)


def test_printer_storage_order_is_grevlex():
    # x1^2 > x0*x2 in grevlex, so it prints first
    assert str(P("x0*x2 - x1^2")) == "-x1^2 + x0*x2"
    assert str(P("2/3*x1*x2 + x0^2")) == "x0^2 + 2/3*x1*x2"
    assert str(Polynomial.zero(3)) == "0"


def test_add_negation_is_empty():
    p = P("x0*x2 - x1^2 + 5/7*x0")
    assert (p + (-p)).terms == {}
    assert poly_arithmetic("add", p, -p).is_zero()


def test_mul_examples():
    assert poly_arithmetic("mul", P("x0 + x1"), P("x0 + x1")) == P("x0^2 + 2*x0*x1 + x1^2")
    assert poly_arithmetic("mul", P("x0*x2 - x1^2"), P("x1")) == P("x0*x1*x2 - x1^3")


def test_mismatched_num_vars():
    with pytest.raises(ValueError, match="mismatched"):
        poly_arithmetic("add", P("x0", 2), P("x0", 3))


@pytest.mark.parametrize("text, expected", [
    ("x0*x2 - x1^2", 2),
    ("x0 + x1*x2", "inhomogeneous"),
    ("0", "zero"),
    ("x0 - x0", "zero"),
    ("7", 0),
])
def test_homogeneous_degree(text, expected):
    assert homogeneous_degree(P(text)) == expected


def test_ideal_rejects_inhomogeneous_with_index():
    with pytest.raises(HomogeneityError) as info:
        Ideal([P("x0*x1"), P("x0 + x1*x2")])
    assert info.value.index == 1
    with pytest.raises(HomogeneityError):
        Ideal([P("0")])


def test_grevlex_rule():
    # a > b iff last nonzero entry of a - b is negative
    assert grevlex_key((0, 2, 0)) > grevlex_key((1, 0, 1))
    assert grevlex_key((1, 1, 0)) > grevlex_key((0, 2, 0))


# -- properties -------------------------------------------------------------

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def polynomials(draw, num_vars=None):
    n = num_vars if num_vars is not None else draw(st.integers(1, 4))
    mono = st.tuples(*[st.integers(0, 2)] * n).filter(lambda m: sum(m) <= 4)
    terms = draw(st.dictionaries(mono, rationals, max_size=5))
    return Polynomial(terms, n)


@st.composite
def triples(draw):
    n = draw(st.integers(1, 4))
    return draw(polynomials(n)), draw(polynomials(n)), draw(polynomials(n))


@given(polynomials())
def test_parse_print_roundtrip(p):
    q = parse_polynomial(format_polynomial(p), p.num_vars)
    assert q.terms == p.terms
    assert list(q.terms) == list(p.terms)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_normalization_idempotent(a, b):
    x = Fraction(a, b)
    y = Fraction(x.numerator, x.denominator)
    assert (y.numerator, y.denominator) == (x.numerator, x.denominator)
    assert x.denominator > 0
    if a == 0:
        assert (x.numerator, x.denominator) == (0, 1)


@settings(max_examples=60)
@given(triples())
def test_ring_axioms(t):
    p, q, r = t
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p
    assert p - p == Polynomial.zero(p.num_vars)


@given(polynomials())
def test_no_zero_coefficients_stored(p):
    assert all(c != 0 for c in p.terms.values())
    keys = list(p.terms)
    assert keys == sorted(keys, key=grevlex_key, reverse=True)
