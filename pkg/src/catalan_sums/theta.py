"""Theta sums, their alpha-coefficients and the closed form built from them.

``theta_bruteforce(m, n, r)`` is the defining sum

    sum_{l=1}^{n-r} l^m (l+r)^m (2l+r) C(2n, n-l) C(2n, n+l+r)

and everything else in this module is checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import FACTORIALS, binom, binom_gen, pochhammer
from .newton import newton_coefficients
from .results import IdentityCheckResult, IdentityMismatch
from .triangle import catalan_entry, catalan_number


@dataclass(frozen=True)
class ThetaParams:
    m: int
    n: int
    r: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.r < 0:
            raise ValueError(f"theta parameters must be nonnegative: {self}")


def _params(p, n=None, r=None) -> ThetaParams:
    if isinstance(p, ThetaParams):
        return p
    return ThetaParams(p, n, r)


def theta_bruteforce(p, n=None, r=None) -> int:
    p = _params(p, n, r)
    m, n, r = p.m, p.n, p.r
    return sum(
        l**m * (l + r) ** m * (2 * l + r) * binom(2 * n, n - l) * binom(2 * n, n + l + r)
        for l in range(1, n - r + 1)
    )


def interpolation_node(i: int, n: int, r: int) -> int:
    return (n - i) ** 2 + r * (n - i)


def alpha_coeff(k: int, p, n=None, r=None) -> Fraction:
    p = _params(p, n, r)
    m, n, r = p.m, p.n, p.r
    denom = pochhammer(2 * n + r - 2 * k, 2 * k + 1)
    if denom == 0:
        raise ZeroDivisionError(
            f"degenerate node spacing: (2n+r-2k)_(2k+1) = 0 at k={k}, n={n}, r={r}"
        )
    num = sum(
        binom(2 * n + r, i)
        * binom_gen(2 * k - 2 * n - r, k - i)
        * interpolation_node(i, n, r) ** m
        * (2 * n + r - 2 * i)
        for i in range(k + 1)
    )
    return Fraction(num, denom)


def theta_closed(p, n=None, r=None) -> Fraction:
    """Closed form as a sum over ``k <= m`` of alpha-weighted binomials."""
    p = _params(p, n, r)
    m, n, r = p.m, p.n, p.r
    if n == 0:
        return Fraction(0)
    total = Fraction(0)
    for k in range(m + 1):
        weight = binom(n - 1, k) * binom(n + r + 1, k + 1)
        # k >= n kills the term; alpha's denominator may vanish there
        if weight == 0:
            continue
        total += (
            Fraction(weight * FACTORIALS[k] * FACTORIALS[k + 1], 2 * n - k)
            * alpha_coeff(k, p)
        )
    return n * binom(2 * n, n) * binom(2 * n, n - r - 1) * total


def theta_check(p, n=None, r=None) -> IdentityCheckResult:
    p = _params(p, n, r)
    return IdentityCheckResult(
        "theta-closed", (p.m, p.n, p.r), theta_closed(p), Fraction(theta_bruteforce(p))
    )


def alpha_via_newton(p, n=None, r=None) -> list[Fraction]:
    """Alpha-coefficients recomputed from generic divided differences.

    With nodes ``x_i = (n-i)^2 + r(n-i)`` and values ``x_i^m`` the Newton
    coefficient ``c_k`` relates to alpha by ``alpha_k = (-1)^k c_k``.
    """
    p = _params(p, n, r)
    m, n, r = p.m, p.n, p.r
    nodes = [interpolation_node(i, n, r) for i in range(m + 1)]
    tableau = newton_coefficients(nodes, [x**m for x in nodes])
    return [(-1) ** k * c for k, c in enumerate(tableau.coefficients)]


def pointwise_expansion_check(m: int, n: int, r: int, l: int) -> IdentityCheckResult:
    """``l^m (l+r)^m = sum_k C(n-l,k) C(n+l+r,k) k!^2 alpha_k``."""
    p = ThetaParams(m, n, r)
    rhs = Fraction(0)
    for k in range(m + 1):
        weight = binom(n - l, k) * binom(n + l + r, k) if n - l >= 0 else 0
        if weight:
            rhs += weight * FACTORIALS[k] ** 2 * alpha_coeff(k, p)
    return IdentityCheckResult("theta-pointwise", (m, n, r, l), Fraction(l**m * (l + r) ** m), rhs)


def binomial_product_relation_check(n: int, r: int, l: int, k: int) -> IdentityCheckResult:
    lhs = binom(n - l, k) * binom(n + l + r, k) * binom(2 * n, n - l) * binom(2 * n, n + l + r)
    rhs = binom(2 * n, k) ** 2 * binom(2 * n - k, n + l) * binom(2 * n - k, n - l - r)
    return IdentityCheckResult("theta-product-relation", (n, r, l, k), lhs, rhs)


def telescoped_sum_check(n: int, r: int, k: int) -> IdentityCheckResult:
    x = 2 * n - k
    lhs = sum((2 * l + r) * binom(x, n + l) * binom(x, n - l - r) for l in range(1, n - r + 1))
    rhs = (n + 1) * binom(x, n + 1) * (binom(x - 1, n - r - 1) if x >= 1 else 0)
    return IdentityCheckResult("theta-telescope", (n, r, k), lhs, rhs)


def bb_odd_power_direct(m: int, n: int, r: int) -> int:
    return sum(
        catalan_entry(n, k) * catalan_entry(n, k + r) * (2 * k + r) ** (2 * m + 1)
        for k in range(1, n - r + 1)
    )


def bb_odd_power_via_theta(m: int, n: int, r: int) -> Fraction:
    """``n^-2 sum_i C(m,i) 4^i r^(2m-2i) Theta_(2i+3)(n, r)``.

    ``B(n,k) B(n,k+r) = k(k+r)/n^2 C(2n,n-k) C(2n,n+k+r)``, so the extra
    ``k(k+r)`` raises every theta index by one.
    """
    total = sum(
        binom(m, i) * 4**i * r ** (2 * m - 2 * i) * theta_bruteforce(i + 1, n, r)
        for i in range(m + 1)
    )
    return Fraction(total, n * n)


def bb_odd_power_printed_form(m: int, n: int, r: int) -> int:
    """The conversion with ``Theta_(2i+1)`` and no ``n^-2``, kept for comparison."""
    return sum(
        binom(m, i) * 4**i * r ** (2 * m - 2 * i) * theta_bruteforce(i, n, r)
        for i in range(m + 1)
    )


def bb_odd_power_sum(m: int, n: int, r: int) -> Fraction:
    if r >= n:
        return Fraction(0)
    direct = Fraction(bb_odd_power_direct(m, n, r))
    via = bb_odd_power_via_theta(m, n, r)
    if direct != via:
        raise IdentityMismatch(f"B-weighted sum paths disagree at m={m}, n={n}, r={r}")
    return direct


def bb_conversion_erratum(m: int, n: int, r: int) -> IdentityCheckResult:
    """Compare the direct B-weighted sum with the uncorrected conversion."""
    return IdentityCheckResult(
        "bb-conversion-as-printed",
        (m, n, r),
        Fraction(bb_odd_power_direct(m, n, r)),
        Fraction(bb_odd_power_printed_form(m, n, r)),
    )


def _theta_prefactor(n: int, r: int) -> int:
    return binom(2 * n, n) * binom(2 * n - 2, n - r - 1) if n >= 1 else 0


def first_values(n: int, r: int) -> list[Fraction]:
    """The four displayed closed forms labelled Theta_1, Theta_3, Theta_5, Theta_7."""
    P = _theta_prefactor(n, r)
    n3 = n**3
    r2 = r * r
    return [
        Fraction(P * n3),
        P * Fraction(n3 * (3 * n**2 - 5 * n - r2 + 1), 2 * n - 3),
        P * Fraction(n3 * (6 * n**3 - 12 * n**2 - 4 * n * r2 + 6 * n + r2 - 1), 2 * n - 3),
        P * Fraction(
            n3
            * (
                30 * n**5 - 150 * n**4 + 252 * n**3 - 30 * n**3 * r2 + 91 * n**2 * r2
                - 185 * n**2 - 53 * n * r2 + 4 * n * r**4 + 65 * n - r**4 + 10 * r2 - 9
            ),
            (2 * n - 3) * (2 * n - 5),
        ),
    ]


def first_values_check(n: int, r: int, shift: int = 2) -> list[IdentityCheckResult]:
    """Test the hypothesis that displayed ``Theta_(2j+1)`` equals ``Theta_(2(j+shift)+1)``.

    ``shift=0`` compares against the defining sum literally.
    """
    return [
        IdentityCheckResult(
            f"theta-first-values[{2 * j + 1}->{2 * (j + shift) + 1}]",
            (n, r),
            value,
            Fraction(theta_bruteforce(j + shift, n, r)),
        )
        for j, value in enumerate(first_values(n, r))
    ]


def newkr_family_check(n: int, r: int) -> list[IdentityCheckResult]:
    """The ``(2k+r)^3``, ``^5`` and ``^7`` B-weighted closed forms."""
    P = _theta_prefactor(n, r)
    r2 = r * r
    a = 3 * n**2 - 5 * n - r2 + 1
    b = 6 * n**3 - 12 * n**2 - 4 * n * r2 + 6 * n + r2 - 1
    closed = {
        3: Fraction(P * (4 * n + r2)),
        5: P * (Fraction(16 * n * a, 2 * n - 3) + 8 * n * r2 + r**4),
        7: P * (Fraction(64 * n * b + 48 * n * a * r2, 2 * n - 3) + 12 * n * r**4 + r**6),
    }
    return [
        IdentityCheckResult(
            f"newkr-{e}", (n, r), Fraction(bb_odd_power_direct((e - 1) // 2, n, r)), rhs
        )
        for e, rhs in closed.items()
    ]


def cc13g_check(n: int) -> IdentityCheckResult:
    if n < 3:
        raise ValueError("the ninth-moment quotient needs n >= 3")
    lhs = Fraction(
        sum(p**9 * catalan_entry(n, p) ** 2 for p in range(1, n + 1)),
        (n + 1) * catalan_number(n) * catalan_number(n - 2),
    )
    rhs = Fraction(n * (30 * n**5 - 150 * n**4 + 252 * n**3 - 185 * n**2 + 65 * n - 9), 2 * n - 5)
    return IdentityCheckResult("cc13g", (n,), lhs, rhs)
