from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cfx.errors import NonDivisible
from cfx.exact_arith import (
    X,
    BivarPoly,
    as_int,
    exact_div,
    format_rational,
    is_integer,
    normalize,
    parse_poly,
    parse_rational,
    poly_eval,
    product,
    rat,
    rat_add,
    rat_div,
    rat_mul,
    rat_sub,
)

small = st.integers(-10**6, 10**6)
nonzero = small.filter(bool)
fractions = st.builds(Fraction, small, st.integers(1, 10**6))
polys = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(1, 5)).filter(
        lambda t: t[0] or t[1]
    ),
    min_size=1,
    max_size=4,
).map(lambda ts: BivarPoly(tuple(ts)))


def test_ops_match_fraction():
    a, b = Fraction(3, 4), Fraction(-5, 6)
    assert rat_add(a, b) == a + b
    assert rat_sub(a, b) == a - b
    assert rat_mul(a, b) == a * b
    assert rat_div(a, b) == a / b


def test_rat_refuses_floats():
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        rat(1, 2.0)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_div(1, 0)
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")


@pytest.mark.parametrize("text, expected", [
    ("7", Fraction(7)),
    ("-6/4", Fraction(-3, 2)),
    ("+10/5", Fraction(2)),
    (" 1/3 ", Fraction(1, 3)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "1e3", "a/b", "1/-2", "", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_always_has_denominator():
    assert format_rational(5) == "5/1"
    assert format_rational(Fraction(-2, 4)) == "-1/2"


def test_integer_helpers():
    assert is_integer(rat(6, 3))
    assert not is_integer(rat(1, 3))
    assert as_int(rat(12, 4)) == 3
    with pytest.raises(ValueError):
        as_int(rat(1, 2))


def test_exact_div():
    assert exact_div(96, 8) == 12
    assert exact_div(-10, 5) == -2
    with pytest.raises(NonDivisible):
        exact_div(97, 8)
    with pytest.raises(ZeroDivisionError):
        exact_div(1, 0)


def test_product():
    assert product([]) == 1
    assert product([Fraction(2, 3), 3, Fraction(-1, 2)]) == -1


@given(fractions, fractions, fractions)
def test_field_axioms(a, b, c):
    A, B, C = rat(a), rat(b), rat(c)
    assert A + B == B + A
    assert (A + B) + C == A + (B + C)
    assert A * (B + C) == A * B + A * C
    assert A - A == 0
    if B != 0:
        assert (A / B) * B == A


@given(small, nonzero)
def test_normalize_idempotent_and_reduced(p, q):
    r = normalize(Fraction(p, q))
    assert normalize(r) == r
    from math import gcd
    assert gcd(int(r.numerator), int(r.denominator)) == 1
    assert r.denominator > 0
    assert r == Fraction(p, q)


@given(fractions)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


def test_poly_construction_merges_and_sorts():
    F = BivarPoly(((0, 1, 2), (1, 0, 1), (0, 1, 3), (2, 2, 0)))
    assert F.terms == ((0, 1, 5), (1, 0, 1))


@pytest.mark.parametrize("terms", [
    (),
    ((0, 0, 1),),
    ((1, 0, -1),),
    ((-1, 0, 1),),
    ((17, 0, 1),),
    ((1, 0, 0),),
])
def test_poly_rejects(terms):
    with pytest.raises(ValueError):
        BivarPoly(terms)


def test_poly_degree_cap_configurable():
    BivarPoly(((20, 0, 1),), max_degree=20)


@pytest.mark.parametrize("text, terms", [
    ("X", ((1, 0, 1),)),
    ("X+Y", ((0, 1, 1), (1, 0, 1))),
    ("3*X^2*Y + Y", ((0, 1, 1), (2, 1, 3))),
    ("3X", ((1, 0, 3),)),
    ("X**2", ((2, 0, 1),)),
    ("X*X", ((2, 0, 1),)),
    ("[[1, 1, 2]]", ((1, 1, 2),)),
])
def test_parse_poly(text, terms):
    assert parse_poly(text).terms == terms


@pytest.mark.parametrize("text", ["", "5", "X+", "Z", "X^a", "X-Y"])
def test_parse_poly_rejects(text):
    with pytest.raises(ValueError):
        parse_poly(text)


def test_poly_eval_and_str():
    F = parse_poly("X^2*Y + 3*Y")
    assert poly_eval(F, 2, 5) == 4 * 5 + 15
    assert F(2, 5) == 35
    assert parse_poly(str(F)) == F
    assert X.is_x() and not F.is_x()


@given(polys, st.integers(0, 50), st.integers(0, 50))
def test_poly_monotone_and_zero_at_origin(F, x, y):
    assert poly_eval(F, 0, 0) == 0
    v = poly_eval(F, x, y)
    assert v >= 0
    assert poly_eval(F, x + 1, y) >= v
    assert poly_eval(F, x, y + 1) >= v
    direct = sum(c * x**dx * y**dy for dx, dy, c in F.terms)
    assert v == direct


@given(polys)
def test_poly_json_roundtrip(F):
    assert BivarPoly.from_json(F.to_json()) == F
    assert parse_poly(str(F)) == F
