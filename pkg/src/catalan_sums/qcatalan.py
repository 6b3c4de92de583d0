"""The q-Catalan triangle, its cyclotomic factorization and the q-analogue of the row-sum identity."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .qpoly import ONE, IntPolynomial, cyclotomic, gaussian_binomial
from .results import IdentityCheckResult


def q_catalan_entry(n: int, k: int) -> IntPolynomial:
    """``(1 - q^k) / (1 - q^n) [2n, n-k]_q``."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"B_(n,k)(q) needs 1 <= k <= n, got n={n}, k={k}")
    numer = IntPolynomial.one_minus_q_pow(k) * gaussian_binomial(2 * n, n - k)
    return numer.exact_div(IntPolynomial.one_minus_q_pow(n))


@dataclass(frozen=True)
class CyclotomicFactorization:
    factors: tuple[tuple[int, int], ...]  # (index, multiplicity), sorted by index

    def expand(self) -> IntPolynomial:
        out = ONE
        for d, mult in self.factors:
            out = out * cyclotomic(d) ** mult
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"Phi_{d}" + (f"^{m}" if m > 1 else "") for d, m in self.factors)


def divisor_product_indices(n: int, k: int) -> list[int]:
    """``i | k`` with ``i`` not dividing ``n``."""
    return [i for i in range(1, k + 1) if k % i == 0 and n % i]


def floor_product_indices(n: int, k: int) -> list[int]:
    """``d`` not dividing ``n`` with ``floor((n-k)/d) + floor((n+k)/d) < floor(2n/d)``; ``d <= 2n``."""
    return [
        d
        for d in range(1, 2 * n + 1)
        if n % d and (n - k) // d + (n + k) // d < (2 * n) // d
    ]


def q_catalan_factorization(n: int, k: int) -> CyclotomicFactorization:
    """Indices from both products; an index in both carries multiplicity two."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"B_(n,k)(q) needs 1 <= k <= n, got n={n}, k={k}")
    counts = Counter(divisor_product_indices(n, k)) + Counter(floor_product_indices(n, k))
    return CyclotomicFactorization(tuple(sorted(counts.items())))


def factorization_overlap(n: int, k: int) -> list[int]:
    return sorted(set(divisor_product_indices(n, k)) & set(floor_product_indices(n, k)))


def factorization_sign(n: int, k: int) -> int:
    """+1 or -1 if the expansion equals the entry up to that unit, else 0."""
    expanded = q_catalan_factorization(n, k).expand()
    entry = q_catalan_entry(n, k)
    if expanded == entry:
        return 1
    if expanded == -entry:
        return -1
    return 0


def factorization_check(n: int, k: int) -> IdentityCheckResult:
    """Compare the expansion with the entry, allowing a global sign (reported in the id)."""
    expanded = q_catalan_factorization(n, k).expand()
    entry = q_catalan_entry(n, k)
    sign = -1 if expanded == -entry and expanded != entry else 1
    return IdentityCheckResult(f"q-factorization[sign={sign:+d}]", (n, k), expanded, entry * sign)


def q_shapiro_sides(n: int) -> tuple[IntPolynomial, IntPolynomial]:
    lhs = IntPolynomial()
    for k in range(1, n + 1):
        lhs = lhs + q_catalan_entry(n, k).shift(comb(k, 2))
    rhs = gaussian_binomial(2 * n, n).exact_div(IntPolynomial([1]) + IntPolynomial.monomial(n))
    return lhs, rhs


def q_shapiro_check(n: int) -> IdentityCheckResult:
    lhs, rhs = q_shapiro_sides(n)
    return IdentityCheckResult("q-shapiro", (n,), lhs, rhs)
