"""Sparse multivariate polynomials over Q in the five indeterminates a, b, c, d, k.

Representation: a polynomial is a tuple of (monomial, coefficient) terms,
where a monomial is a 5-tuple of non-negative exponents in the fixed
variable order (a, b, c, d, k) and coefficients are `fractions.Fraction`.
The tuple is kept in *canonical form*: no zero coefficients, terms sorted
in descending graded-lexicographic order (higher total degree first, ties
broken by comparing exponent tuples left to right, i.e. in the variable
order a, b, c, d, k).  Canonical form makes structural equality coincide
with mathematical equality and gives every polynomial one stable debug
rendering.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .scalar import format_rational

VARIABLES = ("a", "b", "c", "d", "k")
NVARS = len(VARIABLES)

Monomial = tuple[int, int, int, int, int]

_ZERO_MONO: Monomial = (0, 0, 0, 0, 0)


def grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    """Sort key for the documented graded-lexicographic order."""
    return (sum(mono), mono)


def _coerce_coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"polynomial coefficients must be rational, got {type(value).__name__}")


class Polynomial:
    """Immutable sparse polynomial in Q[a, b, c, d, k], always canonical."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            if len(mono) != NVARS or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono!r}")
            coeff = _coerce_coeff(coeff)
            prev = acc.get(mono)
            total = coeff if prev is None else prev + coeff
            if total:
                acc[mono] = total
            elif prev is not None:
                del acc[mono]
        object.__setattr__(self, "_terms",
                           tuple(sorted(acc.items(), key=lambda t: grlex_key(t[0]), reverse=True)))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return _ZERO

    @classmethod
    def one(cls) -> Polynomial:
        return _ONE

    @classmethod
    def constant(cls, value) -> Polynomial:
        value = _coerce_coeff(value)
        return cls({_ZERO_MONO: value}) if value else _ZERO

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        idx = VARIABLES.index(name)
        mono = tuple(1 if i == idx else 0 for i in range(NVARS))
        return cls({mono: Fraction(1)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return sum(self._terms[0][0])

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the graded-lex leading term."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self._terms[0][1]

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for _, coeff in self._terms:
            num_gcd = gcd(num_gcd, abs(coeff.numerator))
            den_lcm = den_lcm * coeff.denominator // gcd(den_lcm, coeff.denominator)
        return Fraction(num_gcd, den_lcm)

    def min_exponents(self) -> Monomial | None:
        """Componentwise minimum exponent vector, i.e. the largest monomial factor."""
        if not self._terms:
            return None
        mins = list(self._terms[0][0])
        for mono, _ in self._terms[1:]:
            for i, e in enumerate(mono):
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for mono, coeff in other._terms:
            prev = acc.get(mono)
            total = coeff if prev is None else prev + coeff
            if total:
                acc[mono] = total
            elif prev is not None:
                del acc[mono]
        return Polynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        # Quadratically many coefficient products, so accumulate plain ints
        # over a common denominator instead of paying a Fraction gcd per pair.
        sden = 1
        for _, c in self._terms:
            sden = sden * c.denominator // gcd(sden, c.denominator)
        oden = 1
        for _, c in other._terms:
            oden = oden * c.denominator // gcd(oden, c.denominator)
        left = [(m, c.numerator * (sden // c.denominator)) for m, c in self._terms]
        right = [(m, c.numerator * (oden // c.denominator)) for m, c in other._terms]
        acc: dict[Monomial, int] = {}
        get = acc.get
        for m1, c1 in left:
            for m2, c2 in right:
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2],
                        m1[3] + m2[3], m1[4] + m2[4])
                acc[mono] = get(mono, 0) + c1 * c2
        den = sden * oden
        return Polynomial({m: Fraction(v, den) for m, v in acc.items() if v})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = _ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, factor) -> Polynomial:
        """self * factor for a rational factor (exact)."""
        factor = _coerce_coeff(factor)
        if not factor:
            return _ZERO
        return Polynomial({m: c * factor for m, c in self._terms})

    def shift_down(self, mono: Monomial) -> Polynomial:
        """Exact division by the monomial `mono` (which must divide every term)."""
        shifted = {}
        for m, c in self._terms:
            new = tuple(e - f for e, f in zip(m, mono))
            if any(e < 0 for e in new):
                raise ValueError(f"monomial {mono!r} does not divide {m!r}")
            shifted[new] = c
        return Polynomial(shifted)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    # -- evaluation and equality -------------------------------------------

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a full assignment of the five variables."""
        try:
            point = tuple(Fraction(values[name]) for name in VARIABLES)
        except KeyError as missing:
            raise ValueError(f"assignment must bind all of {', '.join(VARIABLES)}; "
                             f"missing {missing.args[0]!r}") from None
        total = Fraction(0)
        for mono, coeff in self._terms:
            term = coeff
            for val, exp in zip(point, mono):
                if exp:
                    term *= val ** exp
            total += term
        return total

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(self._terms)

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        """Stable debug form, e.g. ``2*a*b*k^2 - c^2`` (terms in descending
        graded-lex order, ``^`` for powers, coefficient 1 omitted)."""
        if not self._terms:
            return "0"
        pieces = []
        for index, (mono, coeff) in enumerate(self._terms):
            names = "*".join(name if e == 1 else f"{name}^{e}"
                             for name, e in zip(VARIABLES, mono) if e)
            mag = abs(coeff)
            if names:
                body = names if mag == 1 else f"{format_rational(mag)}*{names}"
            else:
                body = format_rational(mag)
            if index == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()})"


_ZERO = Polynomial()
_ONE = Polynomial({_ZERO_MONO: Fraction(1)})
