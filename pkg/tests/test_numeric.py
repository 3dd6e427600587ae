from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hypverify.numeric import (
    DomainError, binomial, factorial, format_rational, gamma_int, pochhammer,
    rational,
)

BIG = 10**30
big_fractions = st.fractions(min_value=-BIG, max_value=BIG, max_denominator=BIG)


def product(lo, hi):
    out = 1
    for i in range(lo, hi + 1):
        out *= i
    return out


@pytest.mark.parametrize("m, expected", [(0, 1), (5, 120), (20, product(1, 20))])
def test_factorial(m, expected):
    assert factorial(m) == expected


def test_factorial_20_frozen():
    assert product(1, 20) == 2432902008176640000
    assert factorial(20) == 2432902008176640000


@pytest.mark.parametrize("m, r, expected", [(5, 2, 10), (3, 0, 1), (4, 7, 0), (4, -1, 0), (0, 0, 1)])
def test_binomial(m, r, expected):
    assert binomial(m, r) == expected


@pytest.mark.parametrize("a, j, expected", [(2, 0, 1), (2, 2, 6), (-2, 3, 0), (-3, 2, 6), (0, 0, 1)])
def test_pochhammer(a, j, expected):
    assert pochhammer(a, j) == expected


def test_domain_errors():
    with pytest.raises(DomainError):
        factorial(-1)
    with pytest.raises(DomainError):
        binomial(-2, 1)
    with pytest.raises(DomainError):
        pochhammer(1, -1)
    with pytest.raises(DomainError):
        gamma_int(0)
    with pytest.raises(DomainError):
        binomial(2.0, 1)


def test_gamma_int():
    assert [gamma_int(m) for m in range(1, 6)] == [1, 1, 2, 6, 24]


def test_rational_arithmetic_examples():
    assert Fraction(1, 3) + Fraction(-1, 2) == Fraction(-1, 6)
    half = Fraction(2, 4)
    assert (half.numerator, half.denominator) == (1, 2)
    assert Fraction(1, 5) * Fraction(1, 2) == Fraction(1, 10)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / Fraction(0)


def test_zero_is_canonical():
    z = rational(Fraction(0, -7))
    assert (z.numerator, z.denominator) == (0, 1)


def test_format_rational():
    assert format_rational(Fraction(-3, 6), json=True) == "-1/2"
    assert format_rational(5, json=True) == "5/1"
    assert format_rational(5) == "5"
    assert format_rational(Fraction(-7, 3)) == "-7/3"


@given(big_fractions, big_fractions, big_fractions)
def test_field_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p


@given(big_fractions)
def test_canonical_form(p):
    from math import gcd
    assert p.denominator > 0
    assert gcd(abs(p.numerator), p.denominator) == 1


def test_pochhammer_recurrence():
    for a in range(-10, 11):
        for j in range(0, 21):
            assert pochhammer(a, j + 1) == pochhammer(a, j) * (a + j)


def test_pascal_and_symmetry():
    for m in range(1, 41):
        for r in range(-2, m + 3):
            assert binomial(m, r) == binomial(m - 1, r - 1) + binomial(m - 1, r)
        for r in range(m + 1):
            assert binomial(m, r) == binomial(m, m - r)


def test_factorial_is_rising_from_one():
    for m in range(30):
        assert factorial(m) == pochhammer(1, m)
