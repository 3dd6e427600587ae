"""Beta integrals and the integral representation of S_n(b, c; x).

The representation is

    S_n(b,c;x) = int_0^1 t^c (1-t)^(b-c) [ (b+1) (1 - x(1-t))^n
                                           - n x (1-t) (1 - x(1-t))^(n-1) ] dt

Expanding each power of ``1 - x(1-t)`` binomially turns every piece into
``t^c (1-t)^q`` for integer ``q``, which integrates to a Beta value.  No
quadrature is involved.
"""

from __future__ import annotations

from fractions import Fraction

from .numeric import DomainError, binomial, factorial
from .params import ParamTriple
from .poly import Polynomial


def beta_exact(p: int, q: int) -> Fraction:
    """B(p, q) = (p-1)! (q-1)! / (p+q-1)! for positive integers."""
    for name, v in (("p", p), ("q", q)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise DomainError(f"Beta parameter {name} must be a positive integer, got {v!r}")
    return Fraction(factorial(p - 1) * factorial(q - 1), factorial(p + q - 1))


def first_term_integral(params: ParamTriple) -> Polynomial:
    """Integral of t^c (1-t)^(b-c) (b+1) (1-x(1-t))^n."""
    n, b, c = params.n, params.b, params.c
    coeffs = []
    for j in range(n + 1):
        sign = -1 if j % 2 else 1
        coeffs.append(sign * binomial(n, j) * (b + 1) * beta_exact(c + 1, b - c + j + 1))
    return Polynomial(coeffs)


def derivative_term_integral(params: ParamTriple) -> Polynomial:
    """Integral of -n x t^c (1-t)^(b-c+1) (1-x(1-t))^(n-1); zero for n = 0."""
    n, b, c = params.n, params.b, params.c
    if n == 0:
        return Polynomial()
    # coefficient of x^(j+1)
    coeffs = [Fraction(0)]
    for j in range(n):
        sign = 1 if j % 2 else -1
        coeffs.append(sign * n * binomial(n - 1, j) * beta_exact(c + 1, b - c + j + 2))
    return Polynomial(coeffs)


def integral_representation(params: ParamTriple) -> Polynomial:
    return first_term_integral(params) + derivative_term_integral(params)


def truncated_first_term_integral(params: ParamTriple) -> Polynomial:
    """What the flawed derivation integrates: the first bracket term only."""
    return first_term_integral(params)
