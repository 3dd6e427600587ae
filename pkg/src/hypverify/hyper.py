"""Terminating Gauss hypergeometric series and unit-argument evaluation.

The series 2F1(-n, upper; lower; x) is a polynomial of degree at most n.
Its value at x = 1 is given by Gauss's Gamma-ratio formula, which for a
terminating series is the Chu-Vandermonde sum.  Gamma is only ever taken
at positive integers; poles raise :class:`~hypverify.numeric.DomainError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric import DomainError, binomial, gamma_int, pochhammer
from .poly import Polynomial


@dataclass(frozen=True)
class TerminatingF21Params:
    """Parameters of 2F1(-n, upper; lower; x).

    ``lower`` may be any integer for which none of the factors
    ``lower, lower+1, ..., lower+n-1`` of the denominator Pochhammer
    symbols is zero.
    """

    n: int
    upper: int
    lower: int

    def __post_init__(self):
        for name in ("n", "upper", "lower"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")
        if self.lower <= 0 and self.lower + self.n - 1 >= 0:
            raise DomainError(
                f"lower parameter {self.lower} hits a pole within {self.n} terms"
            )


def hyp2f1_terminating(params: TerminatingF21Params) -> Polynomial:
    """Expand sum_j (-1)^j C(n,j) (upper)_j / (lower)_j x^j exactly."""
    n, upper, lower = params.n, params.upper, params.lower
    coeffs = []
    for j in range(n + 1):
        sign = -1 if j % 2 else 1
        coeffs.append(
            Fraction(sign * binomial(n, j) * pochhammer(upper, j), pochhammer(lower, j))
        )
    return Polynomial(coeffs)


def gauss_unit(n: int, upper: int, lower: int) -> Fraction:
    """2F1(-n, upper; lower; 1) via Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).

    With a = -n this is Gamma(lower) Gamma(lower+n-upper) divided by
    Gamma(lower+n) Gamma(lower-upper).  All four arguments must be positive
    integers.  For upper = c+1, lower = n+c+1 and n = 0 the last argument
    is 0, so that case is rejected here; the series itself is just 1.
    """
    args = (lower, lower + n - upper, lower + n, lower - upper)
    for m in args:
        if isinstance(m, bool) or not isinstance(m, int) or m <= 0:
            raise DomainError(
                f"Gamma argument {m} is not a positive integer "
                f"(n={n}, upper={upper}, lower={lower})"
            )
    g1, g2, g3, g4 = (gamma_int(m) for m in args)
    return Fraction(g1 * g2, g3 * g4)


def contradiction_ratio(n: int, c: int) -> Fraction:
    """Gamma(n+c+1) Gamma(2n) / (Gamma(2n+c+1) Gamma(n)).

    This is 2F1(-n, c+1; n+c+1; 1): the factor by which the closed form
    misses the Frisch value at x = 1.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer (Gamma(0) pole at n=0), got {n!r}")
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise DomainError(f"c must be a positive integer, got {c!r}")
    num = gamma_int(n + c + 1) * gamma_int(2 * n)
    den = gamma_int(2 * n + c + 1) * gamma_int(n)
    return Fraction(num, den)
