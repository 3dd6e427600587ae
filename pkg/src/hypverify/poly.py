"""Dense univariate polynomials in ``x`` over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import format_rational, rational


class Polynomial:
    """Immutable polynomial with ascending coefficients.

    The stored tuple never ends in a zero, so the zero polynomial is ``()``
    and equality is a plain comparison of coefficient tuples.

    >>> p = Polynomial([Fraction(1, 3), Fraction(-1, 2), Fraction(1, 5)])
    >>> str(p)
    '1/3 - 1/2*x + 1/5*x^2'
    >>> p(1)
    Fraction(1, 30)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [rational(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls([value])

    @classmethod
    def monomial(cls, power: int, coeff=1) -> Polynomial:
        if power < 0:
            raise ValueError("monomial power must be non-negative")
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self[0]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-v for v in self._coeffs])

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, factor) -> Polynomial:
        factor = rational(factor)
        return Polynomial([factor * v for v in self._coeffs])

    def __truediv__(self, divisor):
        divisor = rational(divisor)
        if divisor == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self.scale(1 / divisor)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, point) -> Fraction:
        """Horner evaluation at an exact point."""
        point = rational(point)
        acc = Fraction(0)
        for v in reversed(self._coeffs):
            acc = acc * point + v
        return acc

    evaluate = __call__

    def to_json(self) -> list[str]:
        return [format_rational(v, json=True) for v in self._coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Polynomial:
        return cls(Fraction(s) for s in data)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, v in enumerate(self._coeffs):
            if v == 0:
                continue
            mag = abs(v)
            if i == 0:
                body = format_rational(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{format_rational(mag)}*{var}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(("+ " if v > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


X = Polynomial([0, 1])
ZERO = Polynomial()
ONE = Polynomial([1])
