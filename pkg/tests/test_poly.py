"""Sparse polynomial layer: canonical form, ring arithmetic, rendering."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from butterfly.poly import NVARS, Polynomial, VARIABLES, grlex_key


def var(name):
    return Polynomial.variable(name)


A, B, C, D, K = (var(n) for n in VARIABLES)

monomials = st.tuples(*(st.integers(min_value=0, max_value=4) for _ in range(NVARS)))
coeffs = st.fractions(min_value=-50, max_value=50, max_denominator=20)
polys = st.lists(st.tuples(monomials, coeffs), max_size=8).map(Polynomial)


def naive_mul(p, q):
    """Independent double-loop multiplier used as the arithmetic oracle."""
    acc = {}
    for m1, c1 in p.terms:
        for m2, c2 in q.terms:
            mono = tuple(x + y for x, y in zip(m1, m2))
            acc[mono] = acc.get(mono, Fraction(0)) + c1 * c2
    return Polynomial(acc)


def test_add_cancels():
    assert (A + C) + (A - C) == 2 * A


def test_difference_of_squares():
    assert (A + B) * (A - B) == A * A - B * B


def test_expand_against_naive_oracle():
    p = B * D * K**2 + B * D + C**2
    q = 2 * A
    expected = Polynomial({
        (1, 1, 0, 1, 2): Fraction(2),
        (1, 1, 0, 1, 0): Fraction(2),
        (1, 0, 2, 0, 0): Fraction(2),
    })
    assert p * q == expected
    assert p * q == naive_mul(p, q)


def test_canonical_no_zero_terms():
    p = A - A
    assert p.is_zero()
    assert p.terms == ()
    assert (A * B - A * B + C).terms == C.terms


def test_terms_descending_graded_lex():
    p = K + A * B + C**3 + Polynomial.constant(5)
    monos = [m for m, _ in p.terms]
    keys = [grlex_key(m) for m in monos]
    assert keys == sorted(keys, reverse=True)
    # degree-3 first, then the two degree-ish ties broken a-before-k, constant last
    assert monos[0] == (0, 0, 3, 0, 0)
    assert monos[1] == (1, 1, 0, 0, 0)
    assert monos[2] == (0, 0, 0, 0, 1)
    assert monos[3] == (0, 0, 0, 0, 0)


def test_structural_equality_is_mathematical():
    one_way = (A + B) ** 2
    other_way = A * A + 2 * A * B + B * B
    assert one_way == other_way
    assert hash(one_way) == hash(other_way)


def test_constant_and_int_coercion():
    assert Polynomial.constant(0).is_zero()
    assert A + 0 == A
    assert A * 1 == A
    assert 3 - A == Polynomial.constant(3) - A
    with pytest.raises(TypeError):
        Polynomial.constant(0.5)


def test_degree_and_leading():
    assert Polynomial.zero().degree() == -1
    assert Polynomial.constant(7).degree() == 0
    p = 3 * A * K**2 - B
    assert p.degree() == 3
    assert p.leading_coefficient() == 3
    with pytest.raises(ValueError):
        Polynomial.zero().leading_coefficient()


def test_content():
    p = Polynomial({(1, 0, 0, 0, 0): Fraction(4, 3), (0, 0, 0, 0, 0): Fraction(2, 9)})
    assert p.content() == Fraction(2, 9)
    scaled = p.scale(1 / p.content())
    assert scaled.content() == 1
    assert Polynomial.zero().content() == 0


def test_min_exponents_and_shift_down():
    p = A**2 * B + A * B**2 * K
    assert p.min_exponents() == (1, 1, 0, 0, 0)
    q = p.shift_down((1, 1, 0, 0, 0))
    assert q == A + B * K
    with pytest.raises(ValueError):
        (A + B).shift_down((1, 0, 0, 0, 0))
    assert Polynomial.zero().min_exponents() is None


def test_pow():
    assert (A + 1) ** 0 == Polynomial.one()
    assert (A + 1) ** 3 == (A + 1) * (A + 1) * (A + 1)
    with pytest.raises(ValueError):
        A ** -1


def test_evaluate():
    p = (A + C) * K - B
    values = {"a": Fraction(2), "b": Fraction(1), "c": Fraction(-3),
              "d": Fraction(-2), "k": Fraction(1)}
    assert p.evaluate(values) == Fraction(-2)
    with pytest.raises(ValueError, match="missing 'k'"):
        p.evaluate({"a": 1, "b": 1, "c": 1, "d": 1})


def test_render_format():
    p = 2 * A * B * K**2 - C**2
    assert p.render() == "2*a*b*k^2 - c^2"
    assert Polynomial.zero().render() == "0"
    assert (-A).render() == "-a"
    assert (A - Polynomial.constant(Fraction(1, 2))).render() == "a - 1/2"
    assert str(K**3) == "k^3"


def test_bad_monomial_rejected():
    with pytest.raises(ValueError):
        Polynomial({(1, 2): Fraction(1)})
    with pytest.raises(ValueError):
        Polynomial({(1, 0, 0, 0, -1): Fraction(1)})


@given(polys, polys)
def test_mul_matches_naive_oracle(p, q):
    assert p * q == naive_mul(p, q)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_sub_zero_iff_equal(p, q):
    assert ((p - q).is_zero()) == (p == q)
    assert (p - p).is_zero()


@given(polys)
def test_evaluate_is_hom(p):
    sigma = {"a": Fraction(2), "b": Fraction(-1, 3), "c": Fraction(5, 7),
             "d": Fraction(-4), "k": Fraction(9, 2)}
    q = A * K - B
    assert (p + q).evaluate(sigma) == p.evaluate(sigma) + q.evaluate(sigma)
    assert (p * q).evaluate(sigma) == p.evaluate(sigma) * q.evaluate(sigma)
