"""Compare the binomial sum S_n(b,c;x) with its claimed 2F1 closed form.

Both sides are expanded to exact polynomials for fixed integer (n, b, c):

    S_n(b,c;x) = sum_k (-1)^k C(n,k) x^k / C(b+k, c)
    claimed    = c/(n+c) * 1/C(n+b, b-c) * 2F1(-n, c+1; n+c+1; x)

At x = 1 the sum equals the Frisch value c/(n+c) / C(n+b, b-c), so the
claimed form can only hold if the 2F1 factor is 1 there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .hyper import TerminatingF21Params, hyp2f1_terminating
from .numeric import binomial
from .params import ParamTriple, triple_grid
from .poly import Polynomial


@dataclass(frozen=True)
class CheckReport:
    """One lhs/rhs comparison.

    ``params`` maps parameter names to their bound values; for the built-in
    identity these are n, b and c.
    """

    params: Mapping[str, int]
    lhs: Polynomial
    rhs: Polynomial
    difference: Polynomial = field(init=False)
    equal: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))
        diff = self.lhs - self.rhs
        object.__setattr__(self, "difference", diff)
        object.__setattr__(self, "equal", diff.is_zero())

    def as_dict(self) -> dict:
        out: dict = dict(self.params)
        out.update(
            lhs=self.lhs.to_json(),
            rhs=self.rhs.to_json(),
            difference=self.difference.to_json(),
            equal=self.equal,
        )
        return out


@dataclass(frozen=True)
class Counterexample:
    params: ParamTriple
    difference: Polynomial

    def __post_init__(self):
        if self.difference.is_zero():
            raise ValueError("a counterexample needs a nonzero difference")

    def as_dict(self) -> dict:
        out: dict = self.params.as_dict()
        out["difference"] = self.difference.to_json()
        return out


def definitional_sum(params: ParamTriple) -> Polynomial:
    n, b, c = params.n, params.b, params.c
    coeffs = []
    for k in range(n + 1):
        sign = -1 if k % 2 else 1
        coeffs.append(Fraction(sign * binomial(n, k), binomial(b + k, c)))
    return Polynomial(coeffs)


def frisch_value(params: ParamTriple) -> Fraction:
    n, b, c = params.n, params.b, params.c
    return Fraction(c, n + c) / binomial(n + b, b - c)


def claimed_closed_form(params: ParamTriple) -> Polynomial:
    n, c = params.n, params.c
    series = hyp2f1_terminating(TerminatingF21Params(n, c + 1, n + c + 1))
    return series.scale(frisch_value(params))


def check_frisch(params: ParamTriple) -> bool:
    return definitional_sum(params)(1) == frisch_value(params)


def compare_identity(params: ParamTriple) -> CheckReport:
    return CheckReport(
        params=params.as_dict(),
        lhs=definitional_sum(params),
        rhs=claimed_closed_form(params),
    )


def search_counterexamples(n_max: int, b_max: int) -> list[Counterexample]:
    """All triples with n <= n_max, 1 <= c <= b <= b_max where the forms differ.

    Results are in lexicographic (n, b, c) order.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if b_max < 1:
        raise ValueError(f"b_max must be >= 1, got {b_max}")
    found = []
    for t in triple_grid(n_max, b_max):
        report = compare_identity(t)
        if not report.equal:
            found.append(Counterexample(t, report.difference))
    return found


def frisch_sweep(n_max: int, b_max: int) -> tuple[int, list[ParamTriple]]:
    """Check Frisch's identity on the grid; return (cases checked, failures)."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if b_max < 1:
        raise ValueError(f"b_max must be >= 1, got {b_max}")
    total = 0
    failures = []
    for t in triple_grid(n_max, b_max):
        total += 1
        if not check_frisch(t):
            failures.append(t)
    return total, failures
