"""Exact integer/rational arithmetic and sparse bivariate polynomials.

Rationals are ``gmpy2.mpq`` values: always reduced, positive denominator,
and interoperable with ``int`` and ``fractions.Fraction`` (equal values hash
and compare equal).  Integers are plain Python ``int``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from gmpy2 import mpq, mpz

from .errors import NonDivisible

Rational = type(mpq(0))
RationalLike = Union[int, str, Fraction, Rational]

DEFAULT_MAX_DEGREE = 16

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def rat(value: RationalLike, den: int | None = None) -> Rational:
    """Coerce ``value`` (or ``value/den``) to a reduced rational.

    Strings must be ``"p"`` or ``"p/q"``; floats are refused so that no
    inexact value ever enters a computation.
    """
    if isinstance(value, float) or isinstance(den, float):
        raise TypeError("floats are not accepted; pass an int, 'p/q' or Fraction")
    if isinstance(value, str):
        value = parse_rational(value)
    if den is None:
        return mpq(value)
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return mpq(value, den)


def parse_rational(text: str) -> Rational:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact number: {text!r} (expected 'p' or 'p/q')")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den is not None else 1)


def format_rational(q: RationalLike) -> str:
    """Serialize as ``"num/den"``; the denominator is always written."""
    q = rat(q)
    return f"{q.numerator}/{q.denominator}"


def format_integer(n: int) -> str:
    return str(int(n))


def is_integer(q: RationalLike) -> bool:
    return rat(q).denominator == 1


def as_int(q: RationalLike) -> int:
    q = rat(q)
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return int(q.numerator)


def normalize(q: RationalLike) -> Rational:
    return rat(q)


def rat_add(a: RationalLike, b: RationalLike) -> Rational:
    return rat(a) + rat(b)


def rat_sub(a: RationalLike, b: RationalLike) -> Rational:
    return rat(a) - rat(b)


def rat_mul(a: RationalLike, b: RationalLike) -> Rational:
    return rat(a) * rat(b)


def rat_div(a: RationalLike, b: RationalLike) -> Rational:
    b = rat(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return rat(a) / b


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, raising :class:`NonDivisible` unless ``b | a``."""
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(a, b)
    if r:
        raise NonDivisible(a, b)
    return int(q)


def product(values: Iterable[RationalLike]) -> Rational:
    out = mpq(1)
    for v in values:
        out *= v
    return out


@dataclass(frozen=True)
class BivarPoly:
    """Polynomial in X, Y with non-negative integer coefficients and F(0,0)=0.

    ``terms`` holds ``(deg_x, deg_y, coeff)`` triples.  Duplicate exponent
    pairs are merged and zero coefficients dropped on construction.
    """

    terms: tuple
    max_degree: int = field(default=DEFAULT_MAX_DEGREE, compare=False)

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for term in self.terms:
            dx, dy, c = (int(v) for v in term)
            if dx < 0 or dy < 0:
                raise ValueError(f"negative exponent in term {term!r}")
            if dx > self.max_degree or dy > self.max_degree:
                raise ValueError(
                    f"exponent in {term!r} exceeds max_degree={self.max_degree}"
                )
            if c < 0:
                raise ValueError(f"negative coefficient in term {term!r}")
            merged[(dx, dy)] = merged.get((dx, dy), 0) + c
        merged = {k: c for k, c in merged.items() if c}
        if not merged:
            raise ValueError("polynomial must have at least one nonzero term")
        if (0, 0) in merged:
            raise ValueError("constant term must be zero (F(0,0) = 0)")
        object.__setattr__(
            self, "terms", tuple((dx, dy, c) for (dx, dy), c in sorted(merged.items()))
        )

    def __call__(self, x: int, y: int) -> int:
        return poly_eval(self, x, y)

    def is_x(self) -> bool:
        """True for the polynomial F(X, Y) = X."""
        return self.terms == ((1, 0, 1),)

    def __str__(self):
        parts = []
        for dx, dy, c in self.terms:
            factors = [] if c == 1 else [str(c)]
            for var, d in (("X", dx), ("Y", dy)):
                if d == 1:
                    factors.append(var)
                elif d > 1:
                    factors.append(f"{var}^{d}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json(self) -> list:
        return [list(t) for t in self.terms]

    @classmethod
    def from_json(cls, data, max_degree: int = DEFAULT_MAX_DEGREE) -> "BivarPoly":
        if not isinstance(data, list) or not all(
            isinstance(t, (list, tuple)) and len(t) == 3 for t in data
        ):
            raise ValueError("polynomial JSON must be a list of [degX, degY, coeff]")
        return cls(tuple(tuple(int(v) for v in t) for t in data), max_degree)


X = BivarPoly(((1, 0, 1),))

_FACTOR_RE = re.compile(r"^([XY])(?:\^(\d+))?$")


def parse_poly(text: str, max_degree: int = DEFAULT_MAX_DEGREE) -> BivarPoly:
    """Parse ``"X"``, ``"X+Y"``, ``"3*X^2*Y + Y"`` or a JSON monomial list."""
    text = text.strip()
    if text.startswith("["):
        return BivarPoly.from_json(json.loads(text), max_degree)
    terms = []
    for mono in text.replace(" ", "").replace("**", "^").split("+"):
        if not mono:
            raise ValueError(f"empty monomial in {text!r}")
        coeff, dx, dy = 1, 0, 0
        # allow a bare leading coefficient such as "3X"
        m = re.match(r"^(\d+)\*?(?=[XY]|$)", mono)
        if m:
            coeff = int(m.group(1))
            mono = mono[m.end():]
        for factor in mono.split("*") if mono else []:
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            d = int(fm.group(2) or 1)
            if fm.group(1) == "X":
                dx += d
            else:
                dy += d
        terms.append((dx, dy, coeff))
    return BivarPoly(tuple(terms), max_degree)


def poly_eval(F: BivarPoly, x: int, y: int) -> int:
    x, y = int(x), int(y)
    return sum(c * x**dx * y**dy for dx, dy, c in F.terms)


def to_int(v) -> int:
    """Plain ``int`` from an ``int``/``mpz`` value."""
    if isinstance(v, (int, type(mpz(0)))):
        return int(v)
    return as_int(v)
