"""Power sums ``sum_k C(2n, n-k) k^e`` and the ``f(n, k, r)`` family."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import FACTORIALS, binom, binom_gen, pochhammer
from .results import DivisibilityVerdict, IdentityCheckResult, IdentityMismatch


def power_sum(n: int, e: int) -> int:
    """``sum_{k=1}^{n} C(2n, n-k) k^e`` by direct summation."""
    return sum(binom(2 * n, n - k) * k**e for k in range(1, n + 1))


def _inner(n: int, k: int, power: int) -> int:
    return sum(
        binom(2 * n, i) * binom_gen(2 * k - 2 * n, k - i) * (n - i) ** power
        for i in range(k + 1)
    )


@lru_cache(maxsize=None)
def f_nk(n: int, k: int, r: int) -> int:
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"f(n, k, r) needs 0 <= k <= n, got n={n}, k={k}")
    return binom(2 * n - 2 * k, n - k) * _inner(n, k, 2 * r + 1)


def f_recurrence_check(n: int, k: int, r: int) -> IdentityCheckResult:
    """``f(n,k,r) = n^2 f(n,k,r-1) - 2n(2n-1) f(n-1,k-1,r-1)``."""
    if r < 1:
        raise ValueError("the recurrence needs r >= 1")
    second = f_nk(n - 1, k - 1, r - 1) if k >= 1 else 0
    rhs = n * n * f_nk(n, k, r - 1) - 2 * n * (2 * n - 1) * second
    return IdentityCheckResult("f-recurrence", (n, k, r), f_nk(n, k, r), rhs)


def f_divisor(n: int, r: int) -> int:
    return n ** min(2, r + 1) * binom(2 * n, n)


def f_sum(n: int, r: int) -> int:
    return sum(f_nk(n, k, r) for k in range(min(r, n) + 1))


def odd_power_sum(n: int, r: int) -> DivisibilityVerdict:
    s = power_sum(n, 2 * r + 1)
    if 2 * s != f_sum(n, r):
        raise IdentityMismatch(f"odd power sum disagrees with the f-expansion at n={n}, r={r}")
    return DivisibilityVerdict(s, n * n * binom(2 * n, n), label=f"odd-power(n={n},r={r})")


def odd_power_closed_forms_check(n: int) -> list[IdentityCheckResult]:
    base = Fraction(n * n, 2) * binom(2 * n, n)
    closed = {
        3: base,
        5: base * (2 * n - 1),
        7: base * (6 * n**2 - 8 * n + 3),
        9: base * (24 * n**3 - 60 * n**2 + 54 * n - 17),
    }
    return [
        IdentityCheckResult(f"odd-power-k{e}", (n,), Fraction(power_sum(n, e)), rhs)
        for e, rhs in closed.items()
    ]


def odd_quotient_parity(n: int, r: int) -> bool:
    if r < 1:
        raise ValueError("the parity claim is for r >= 1")
    q = Fraction(f_sum(n, r), n * n * binom(2 * n, n))
    return q.denominator == 1 and q.numerator % 2 == 1


def even_power_expansion(n: int, r: int) -> Fraction:
    return sum(
        (Fraction(4) ** (n - k - 1) * _inner(n, k, 2 * r - 1) for k in range(r)),
        Fraction(0),
    )


def even_power_sum(n: int, r: int) -> int:
    if r < 1:
        raise ValueError("even power sums need r >= 1")
    direct = power_sum(n, 2 * r)
    if direct != even_power_expansion(n, r):
        raise IdentityMismatch(f"even power sum paths disagree at n={n}, r={r}")
    return direct


def even_power_closed_forms_check(n: int) -> list[IdentityCheckResult]:
    two = Fraction(2)
    closed = {
        2: Fraction(4) ** (n - 1) * n,
        4: two ** (2 * n - 3) * n * (3 * n - 1),
        6: two ** (2 * n - 4) * n * (15 * n**2 - 15 * n + 4),
        8: two ** (2 * n - 5) * n * (105 * n**3 - 210 * n**2 + 147 * n - 34),
        10: two ** (2 * n - 6) * n * (945 * n**4 - 3150 * n**3 + 4095 * n**2 - 2370 * n + 496),
    }
    return [
        IdentityCheckResult(f"even-power-k{e}", (n,), Fraction(power_sum(n, e)), rhs)
        for e, rhs in closed.items()
    ]


def square_expansion_check(n: int, r: int, l: int) -> IdentityCheckResult:
    """Pointwise Newton expansion of ``l^(2r)`` in the basis ``C(n-l,k) C(n+l,k)``."""
    rhs = Fraction(0)
    for k in range(r + 1):
        weight = binom(n - l, k) * binom(n + l, k)
        if weight == 0:
            continue
        rhs += Fraction(
            2 * weight * FACTORIALS[k] ** 2 * _inner(n, k, 2 * r + 1),
            pochhammer(2 * n - 2 * k, 2 * k + 1),
        )
    return IdentityCheckResult("square-expansion", (n, r, l), Fraction(l ** (2 * r)), rhs)
