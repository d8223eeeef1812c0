"""Rational function field: cross-multiplied equality and the cheap normal form."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from butterfly import DenominatorVanishes, Polynomial, RationalFunction, ZeroDenominator

a, b, c, d, k = RationalFunction.variables()

SIGMA = {"a": Fraction(2), "b": Fraction(1), "c": Fraction(-3),
         "d": Fraction(-2), "k": Fraction(1)}


def pvar(name):
    return Polynomial.variable(name)


def test_common_factor_equality():
    assert a / k == (a * b) / (k * b)


def test_commuted_forms_equal():
    assert (a + c) / 2 == (c + a) / 2


def test_equality_without_gcd():
    # (a^2 - c^2)/(a - c) and (a + c) differ structurally, agree as functions
    f = RationalFunction(pvar("a") ** 2 - pvar("c") ** 2, pvar("a") - pvar("c"))
    g = a + c
    assert f == g
    assert f.num != g.num  # the normal form did not fully reduce


def test_inequality():
    assert a / k != a / b
    assert a != a + 1


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        RationalFunction(pvar("a"), Polynomial.zero())
    with pytest.raises(ZeroDenominator):
        a / (b - b)


def test_zero_numerator_collapses():
    f = RationalFunction(Polynomial.zero(), pvar("k") ** 3)
    assert f.is_zero()
    assert f.den == Polynomial.one()
    assert not f


def test_common_monomial_cancelled():
    f = RationalFunction(pvar("a") ** 2 * pvar("b"), pvar("a") * pvar("k"))
    assert f.num == pvar("a") * pvar("b")
    assert f.den == pvar("k")


def test_denominator_normalization():
    f = RationalFunction(pvar("a"), Polynomial.constant(Fraction(-2, 3)) * pvar("k"))
    assert f.den.leading_coefficient() > 0
    assert f.den.content() == 1
    assert f.den == pvar("k")
    assert f == RationalFunction(Polynomial.constant(Fraction(-3, 2)) * pvar("a"), pvar("k"))


def test_immutable_and_unhashable():
    with pytest.raises(AttributeError):
        a.num = None
    with pytest.raises(TypeError):
        hash(a)
    with pytest.raises(TypeError):
        {a}


def test_arithmetic():
    assert a + b - b == a
    assert (a / k) * (k / a) == 1
    assert 1 / (a / b) == b / a
    assert 2 * a == a + a
    assert a - 2 == -(2 - a)
    assert (a / b) ** 2 == (a * a) / (b * b)
    assert (a / b) ** -1 == b / a
    assert a ** 0 == 1


def test_division_by_zero_function():
    with pytest.raises(ZeroDenominator):
        a / RationalFunction.constant(0)
    with pytest.raises(ZeroDenominator):
        RationalFunction.constant(0) ** -1


def test_evaluate():
    ratio = (k * k + 1) * b * d / (a * c)
    assert ratio.evaluate(SIGMA) == Fraction(2, 3)
    assert ((a + c) / 2).evaluate(SIGMA) == Fraction(-1, 2)


def test_evaluate_denominator_vanishes():
    f = a / (a - 2)
    with pytest.raises(DenominatorVanishes):
        f.evaluate(SIGMA)


def test_render():
    assert str(a + 1) == "a + 1"
    assert str(a / k) == "(a) / (k)"
    assert repr(RationalFunction.constant(Fraction(1, 2))) == "RationalFunction(1/2)"


small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def ratfuns(draw):
    nc = [draw(small_ints) for _ in range(3)]
    dc = [draw(small_ints) for _ in range(2)]
    num = nc[0] * pvar("a") * pvar("k") + nc[1] * pvar("b") + Polynomial.constant(nc[2])
    den = dc[0] * pvar("c") + Polynomial.constant(dc[1])
    if den.is_zero():
        den = Polynomial.one()
    return RationalFunction(num, den)


@given(ratfuns(), ratfuns(), ratfuns())
def test_field_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) - g == f


@given(ratfuns(), ratfuns())
def test_equivalence_against_padded_forms(f, g):
    pad = pvar("d") ** 2 + 1
    f_padded = RationalFunction(f.num * pad, f.den * pad)
    assert f == f_padded
    assert (f == g) == (f_padded == g)


@given(ratfuns(), ratfuns())
def test_evaluation_homomorphism(f, g):
    sigma = {"a": Fraction(3, 2), "b": Fraction(-5), "c": Fraction(7, 4),
             "d": Fraction(1, 9), "k": Fraction(-2, 3)}
    try:
        fv, gv = f.evaluate(sigma), g.evaluate(sigma)
    except DenominatorVanishes:
        return
    assert (f + g).evaluate(sigma) == fv + gv
    assert (f - g).evaluate(sigma) == fv - gv
    assert (f * g).evaluate(sigma) == fv * gv
    if gv != 0 and g:
        assert (f / g).evaluate(sigma) == fv / gv
