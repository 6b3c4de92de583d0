"""The Catalan triangle ``B(n, k) = (k/n) C(2n, n-k)`` for ``1 <= k <= n``."""

from __future__ import annotations

from fractions import Fraction

from .exact import binom
from .results import IdentityCheckResult


def catalan_entry(n: int, k: int) -> int:
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"B(n, k) needs 1 <= k <= n, got n={n}, k={k}")
    q, rem = divmod(k * binom(2 * n, n - k), n)
    assert rem == 0, f"inexact division in B({n}, {k})"
    return q


def catalan_entry_or_zero(n: int, k: int) -> int:
    """``B(n, k)`` extended by zero to ``k > n``, as the mixed-row sums need."""
    if 1 <= k <= n:
        return catalan_entry(n, k)
    if k < 1:
        raise ValueError(f"B(n, k) is not defined for k={k}")
    return 0


def catalan_row(n: int) -> list[int]:
    """Entries ``B(n, 1), ..., B(n, n)``."""
    return [catalan_entry(n, k) for k in range(1, n + 1)]


def central_binom(n: int) -> int:
    return binom(2 * n, n)


def catalan_number(j: int) -> int:
    return binom(2 * j, j) // (j + 1)


def shapiro_row_sum_check(n: int) -> IdentityCheckResult:
    lhs = Fraction(sum(k * binom(2 * n, n - k) for k in range(1, n + 1)))
    rhs = Fraction(n, 2) * binom(2 * n, n)
    return IdentityCheckResult("shapiro", (n,), lhs, rhs)


def catalan_power_sum(n: int, r: int, s: int) -> int:
    """``sum_{k=1}^{n} k^r B(n, k)^s``."""
    return sum(k**r * b**s for k, b in enumerate(catalan_row(n), start=1))
