"""Exact verification of binomial-sum identities, divisibility theorems and
conjectures around the Catalan triangle ``B(n, k) = (k/n) C(2n, n-k)``."""

from .exact import binom, binom_gen, bit_count, p_adic_valuation, pochhammer
from .results import DivisibilityVerdict, IdentityCheckResult, IdentityMismatch
from .triangle import catalan_entry, catalan_row, shapiro_row_sum_check

__version__ = "0.1.0"

__all__ = [
    "binom",
    "binom_gen",
    "bit_count",
    "p_adic_valuation",
    "pochhammer",
    "DivisibilityVerdict",
    "IdentityCheckResult",
    "IdentityMismatch",
    "catalan_entry",
    "catalan_row",
    "shapiro_row_sum_check",
]
