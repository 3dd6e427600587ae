"""Exact verification and refutation of parametric binomial-sum identities.

Everything is computed over exact rationals: both sides of an identity are
expanded into canonical polynomials in ``x`` and compared structurally.

>>> from hypverify import ParamTriple, compare_identity
>>> report = compare_identity(ParamTriple(2, 3, 1))
>>> str(report.lhs), str(report.rhs), report.equal
('1/3 - 1/2*x + 1/5*x^2', '1/30 - 1/30*x + 1/100*x^2', False)
"""

from .betaint import (
    beta_exact, integral_representation, truncated_first_term_integral,
)
from .checker import (
    CheckReport, Counterexample, check_frisch, claimed_closed_form,
    compare_identity, definitional_sum, frisch_sweep, frisch_value,
    search_counterexamples,
)
from .hyper import (
    TerminatingF21Params, contradiction_ratio, gauss_unit, hyp2f1_terminating,
)
from .numeric import DomainError, binomial, factorial, gamma_int, pochhammer
from .params import ParamTriple, triple_grid
from .poly import X, Polynomial

__version__ = "0.1.0"
