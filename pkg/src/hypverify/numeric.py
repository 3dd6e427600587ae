"""Exact scalars and combinatorial primitives.

Rationals are :class:`fractions.Fraction` instances, which are always stored
in lowest terms with a positive denominator, and Python integers are already
arbitrary precision.  This module adds the few integer functions the rest of
the package needs, with the conventions used throughout:

* ``binomial(m, r)`` is 0 whenever ``r`` falls outside ``0..m``;
* ``pochhammer(a, j)`` is the rising factorial and accepts negative ``a``;
* ``gamma_int(m)`` is only defined for positive integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Integral, Rational

ExactRational = Fraction


class DomainError(ValueError):
    """An argument lies outside the exact domain of a function."""


def _natural(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")
    return int(value)


def _integer(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    return int(value)


def rational(value) -> Fraction:
    """Coerce an int or Fraction (or ``"p/q"`` string) to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Integral, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def factorial(m: int) -> int:
    return math.factorial(_natural(m, "m"))


def binomial(m: int, r: int) -> int:
    """C(m, r) for natural m, zero when r < 0 or r > m."""
    m = _natural(m, "m")
    r = _integer(r, "r")
    if r < 0 or r > m:
        return 0
    return math.comb(m, r)


def pochhammer(a: int, j: int) -> int:
    """Rising factorial a(a+1)...(a+j-1); (a)_0 = 1."""
    a = _integer(a, "a")
    j = _natural(j, "j")
    out = 1
    for i in range(j):
        out *= a + i
        if out == 0:
            break
    return out


def gamma_int(m: int) -> int:
    """Gamma at a positive integer, i.e. (m-1)!.

    Non-positive integers are poles and raise :class:`DomainError`.
    """
    m = _integer(m, "Gamma argument")
    if m <= 0:
        raise DomainError(f"Gamma has a pole at {m}")
    return math.factorial(m - 1)


def format_rational(q, *, json: bool = False) -> str:
    """Render ``q`` as ``"p/q"``.

    Integers keep the ``/1`` suffix in JSON form and are bare otherwise.
    """
    q = rational(q)
    if q.denominator == 1 and not json:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
