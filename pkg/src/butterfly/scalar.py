"""Exact scalar arithmetic shared by both backends of the geometry kernel.

A "scalar" anywhere in this package is either a `fractions.Fraction`
(numeric work) or a `RationalFunction` over Q(a, b, c, d, k) (symbolic
work, see `ratfun`).  The two meet a common protocol — the arithmetic
operators plus truthiness, where ``bool(x)`` is False exactly for the
zero element — which keeps the kernel generic without a class hierarchy.
No floats appear anywhere; equality is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from random import Random

from .errors import DivisionByZero, ZeroDenominator

Rational = Fraction


def rational_from_parts(num: int, den: int) -> Fraction:
    """The reduced, denominator-positive rational num/den."""
    if den == 0:
        raise ZeroDenominator(f"rational with zero denominator: {num}/0")
    return Fraction(num, den)


def is_zero(x) -> bool:
    """Exact zero test, valid for every scalar backend."""
    return not x


def field_div(x, y, context: str = "division by zero"):
    """x / y, raising a typed error that names the geometric situation."""
    if not y:
        raise DivisionByZero(context)
    return x / y


def format_rational(x: Fraction) -> str:
    """Canonical "p/q" form ("p" alone when q = 1)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the canonical "p/q" form; inverse of format_rational."""
    body = text.strip()
    num, sep, den = body.partition("/")
    try:
        if sep:
            return rational_from_parts(int(num), int(den))
        return Fraction(int(body))
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None


def sample_rational(rng: Random, bound: int) -> Fraction:
    """Uniform draw from the reduced fractions p/q, |p| <= bound, 1 <= q <= bound.

    Rejection sampling over the (p, q) grid: a reduced pair is kept, any
    other redrawn, so every reduced fraction in range is equally likely.
    Deterministic for a given generator state.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    while True:
        p = rng.randint(-bound, bound)
        q = rng.randint(1, bound)
        if gcd(abs(p), q) == 1:
            return Fraction(p, q)


def derive_rng(seed: int, *labels: object) -> Random:
    """Independent deterministic generator for one trial or task.

    Seeding by the label path string makes streams for different labels
    independent of each other and of execution order, so trials are
    replayable individually and could run in parallel without changing
    what any one of them draws.
    """
    return Random(":".join([str(seed), *(str(item) for item in labels)]))
