"""
Where the derivation goes wrong
===============================

The integral representation has two bracket terms.  Integrating both gives
back the sum exactly; keeping only the first one does not, and it does
not give the claimed closed form either.
"""

from hypverify import (
    ParamTriple, claimed_closed_form, definitional_sum, integral_representation,
    truncated_first_term_integral, triple_grid,
)
from hypverify.betaint import derivative_term_integral

# full representation == sum over a whole grid
assert all(integral_representation(t) == definitional_sum(t) for t in triple_grid(6, 6))

t = ParamTriple(1, 2, 1)
print("true sum        :", definitional_sum(t))
print("first term only :", truncated_first_term_integral(t))
print("dropped term    :", derivative_term_integral(t))
print("claimed form    :", claimed_closed_form(t))

# the gap is exactly the dropped derivative term
for t in triple_grid(4, 4):
    gap = integral_representation(t) - truncated_first_term_integral(t)
    assert gap == derivative_term_integral(t)
