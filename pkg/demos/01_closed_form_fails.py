"""
Checking the 2F1 closed form against the binomial sum
=====================================================

Expand both sides at one parameter point and compare them coefficient by
coefficient.
"""

from fractions import Fraction

from hypverify import ParamTriple, compare_identity, contradiction_ratio, frisch_value

t = ParamTriple(n=2, b=3, c=1)
report = compare_identity(t)

print("sum         :", report.lhs)
print("closed form :", report.rhs)
print("equal       :", report.equal)
print("difference  :", report.difference)

# At x = 1 the sum gives the Frisch value...
print("sum at 1    :", report.lhs(1), "== Frisch", frisch_value(t))

# ...but the closed form picks up an extra Gamma-ratio factor there
ratio = contradiction_ratio(t.n, t.c)
print("closed at 1 :", report.rhs(1), "== Frisch *", ratio)
assert report.rhs(1) == frisch_value(t) * ratio
assert ratio == Fraction(36, 120)
