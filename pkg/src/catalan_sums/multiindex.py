"""Cyclic binomial products and the sums they index."""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

from .exact import FACTORIALS, binom
from .results import DivisibilityVerdict, IdentityCheckResult


class CompositionIndex(tuple):
    """Positive integers ``(n_1, ..., n_m)`` read cyclically."""

    def __new__(cls, entries: Sequence[int]):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("a composition needs at least one entry")
        if any(x < 1 for x in entries):
            raise ValueError(f"composition entries must be positive: {entries}")
        return super().__new__(cls, entries)

    def succ(self, i: int) -> int:
        """Entry after position ``i`` (0-based), wrapping to the first."""
        return self[(i + 1) % len(self)]


def _comp(a) -> CompositionIndex:
    return a if isinstance(a, CompositionIndex) else CompositionIndex(a)


def cyclic_product(a, k: int) -> int:
    a = _comp(a)
    total = 1
    for i, x in enumerate(a):
        top = x + a.succ(i)
        total *= binom(top, x + k)
        if not total:
            return 0
    return total


def power_weighted_cyclic_sum(a, power: int) -> int:
    a = _comp(a)
    return sum(k**power * cyclic_product(a, k) for k in range(1, a[0] + 1))


def s_value(r: int, a) -> Fraction:
    a = _comp(a)
    return Fraction(
        power_weighted_cyclic_sum(a, 2 * r + 1), a[0] * binom(a[0] + a[-1], a[0])
    )


def s_sum(r: int, a) -> DivisibilityVerdict:
    a = _comp(a)
    return DivisibilityVerdict(
        power_weighted_cyclic_sum(a, 2 * r + 1),
        a[0] * binom(a[0] + a[-1], a[0]),
        label=f"S_{2 * r + 1}{tuple(a)}",
    )


def s_via_rewriting(r: int, a) -> Fraction:
    """``(n_1-1)! n_m! / (n_1+n_m)! * sum_k C(n;k) k^(2r+1)``."""
    a = _comp(a)
    pre = Fraction(FACTORIALS[a[0] - 1] * FACTORIALS[a[-1]], FACTORIALS[a[0] + a[-1]])
    return pre * power_weighted_cyclic_sum(a, 2 * r + 1)


def s_recurrence_rhs(r: int, a) -> Fraction:
    a = _comp(a)
    if len(a) < 3:
        raise ValueError("the recurrence needs at least three entries")
    n1, n2, n3 = a[0], a[1], a[2]
    tail = tuple(a[2:])
    return sum(
        (
            binom(n1 - 1, l - 1) * binom(n2 + n3, n2 - l) * s_value(r, (l,) + tail)
            for l in range(1, n1 + 1)
        ),
        Fraction(0),
    )


def s_recurrence_check(r: int, a) -> IdentityCheckResult:
    a = _comp(a)
    return IdentityCheckResult("s-recurrence", (r, tuple(a)), s_value(r, a), s_recurrence_rhs(r, a))


def pfaff_check(n1: int, n2: int, n3: int, k: int) -> IdentityCheckResult:
    lhs = Fraction(binom(n1 + n2, n1 + k) * binom(n2 + n3, n2 + k) * binom(n3 + n1, n3 + k))
    rec = FACTORIALS.reciprocal
    rhs = Fraction(0)
    for s in range(0, n1 - k + 1):
        top = n1 + n2 + n3 - k - s
        if top < 0:
            continue
        rhs += (
            FACTORIALS[top]
            * rec(s) * rec(s + 2 * k) * rec(n1 - k - s) * rec(n2 - k - s) * rec(n3 - k - s)
        )
    return IdentityCheckResult("pfaff-saalschutz", (n1, n2, n3, k), lhs, rhs)


def lambda_chains(top: int, length: int, low: int = 1) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing chains ``top >= l_1 >= ... >= l_length >= low``, lexicographic descent."""
    if length == 0:
        yield ()
        return
    for head in range(top, low - 1, -1):
        for rest in lambda_chains(head, length - 1, low):
            yield (head,) + rest


def _chain_product(a: CompositionIndex, chain: tuple[int, ...], shift: int) -> int:
    lam = (a[0],) + chain
    return prod(
        binom(lam[i - 1] - shift, lam[i] - shift) * binom(a[i] + a[i + 1], a[i] - lam[i])
        for i in range(1, len(a) - 1)
    )


def lambda_sum_rhs(a, power: int) -> Fraction:
    a = _comp(a)
    m = len(a)
    if m < 3:
        raise ValueError("the chain sums need at least three entries")
    n1, nm = a[0], a[-1]
    total = 0
    for chain in lambda_chains(n1, m - 2, 1):
        last = chain[-1]
        if power == 1:
            lead = binom(last + nm - 1, last)
        elif power == 3:
            lead = binom(last + nm - 2, last - 1)
        else:
            raise ValueError("chain sums exist for power 1 and 3 only")
        total += lead * _chain_product(a, chain, 1)
    pre = Fraction(n1, 2) if power == 1 else Fraction(n1 * nm, 2)
    return pre * binom(n1 + nm, n1) * total


def lambda_sum_check(a, power: int) -> IdentityCheckResult:
    a = _comp(a)
    return IdentityCheckResult(
        f"lambda-sum-k{power}",
        tuple(a),
        Fraction(power_weighted_cyclic_sum(a, power)),
        lambda_sum_rhs(a, power),
    )


def gjz_alternating_check(a) -> IdentityCheckResult:
    a = _comp(a)
    if len(a) < 3:
        raise ValueError("the alternating identity needs at least three entries")
    n1 = a[0]
    lhs = sum((-1) ** (k & 1) * cyclic_product(a, k) for k in range(-n1, n1 + 1))
    chains = sum(_chain_product(a, chain, 0) for chain in lambda_chains(n1, len(a) - 2, 0))
    rhs = binom(n1 + a[-1], n1) * chains
    return IdentityCheckResult("gjz-alternating", tuple(a), Fraction(lhs), Fraction(rhs))


def restated_value(r: int, a, closure: str = "zero") -> Fraction:
    """``2 (n_1-1)! prod (n_i+n_(i+1))!/(2n_i)! * sum_k k^(2r+1) prod C(2n_i, n_i+k)``.

    ``closure="zero"`` takes ``n_(m+1) = 0``; ``closure="cyclic"`` takes ``n_1``.
    """
    a = _comp(a)
    if closure not in ("zero", "cyclic"):
        raise ValueError(f"unknown closure {closure!r}")
    pre = Fraction(2 * FACTORIALS[a[0] - 1])
    for i, x in enumerate(a):
        nxt = a.succ(i) if (closure == "cyclic" or i + 1 < len(a)) else 0
        pre *= Fraction(FACTORIALS[x + nxt], FACTORIALS[2 * x])
    total = sum(
        k ** (2 * r + 1) * prod(binom(2 * x, x + k) for x in a) for k in range(1, a[0] + 1)
    )
    return pre * total


def restated_verdict(r: int, a, closure: str = "zero") -> DivisibilityVerdict:
    return DivisibilityVerdict(
        restated_value(r, a, closure), 1, label=f"restated[{closure}]{tuple(_comp(a))}"
    )
