from __future__ import annotations

from dataclasses import dataclass

from .numeric import DomainError


@dataclass(frozen=True, order=True)
class ParamTriple:
    """Integer parameters (n, b, c) of the binomial sum.

    The validated domain is ``n >= 0`` and ``1 <= c <= b``.  ``c = 0`` is
    excluded because the Frisch prefactor ``c/(n+c)`` vanishes there while
    the sum does not, and ``c > b`` would divide by ``C(b+k, c) = 0``.
    Ordering is lexicographic on (n, b, c).
    """

    n: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("n", "b", "c"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise DomainError(f"{name} must be an integer, got {v!r}")
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got n={self.n}")
        if self.c < 1:
            raise DomainError(f"c must be >= 1, got c={self.c}")
        if self.c > self.b:
            raise DomainError(f"c must not exceed b, got b={self.b}, c={self.c}")

    def as_dict(self) -> dict[str, int]:
        return {"n": self.n, "b": self.b, "c": self.c}

    def __str__(self):
        return f"({self.n}, {self.b}, {self.c})"


def triple_grid(n_max: int, b_max: int):
    """Yield every valid triple with n <= n_max, b <= b_max in (n, b, c) order."""
    for n in range(n_max + 1):
        for b in range(1, b_max + 1):
            for c in range(1, b + 1):
                yield ParamTriple(n, b, c)
