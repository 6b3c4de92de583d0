"""Divisibility corollaries of the cyclic-sum theorem as named presets.

Every preset is a sum over ``k`` together with one or more claimed divisors;
:func:`corollary_divisibility_report` evaluates both exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Callable, Iterator

from .exact import FACTORIALS, binom
from .multiindex import restated_value
from .results import DivisibilityVerdict
from .triangle import catalan_entry_or_zero

fact = FACTORIALS.__getitem__


def _lcm_term(x: int, y: int) -> int:
    return x * y // gcd(x, y) * binom(x + y, x)


def _cor_pair(m, n, r, a):
    total = 2 * sum(
        k ** (2 * a + 1) * binom(m + n, m + k) ** r * binom(m + n, n + k) ** r
        for k in range(1, m + 1)
    )
    return total, [_lcm_term(m, n)]


def _cor_triple(l, m, n, r, a):
    total = 2 * sum(
        k ** (2 * a + 1)
        * binom(l + m, l + k) ** r
        * binom(m + n, m + k) ** r
        * binom(n + l, n + k) ** r
        for k in range(1, l + 1)
    )
    return total, [_lcm_term(l, m), _lcm_term(m, n), _lcm_term(n, l)]


def _cor_nn1(r, s, n, a):
    total = sum(
        k ** (2 * a + 1)
        * binom(2 * n + 1, n + k + 1) ** r
        * binom(2 * n + 1, n + k) ** r
        * binom(2 * n, n + k) ** s
        for k in range(1, n + 1)
    )
    return total, [Fraction(n * (n + 1), 2) * binom(2 * n + 1, n)]


def _cor_restated(r, *entries):
    return restated_value(r, entries, closure="zero"), [1]


def _cor_mn(m, n, r, s, a):
    total = sum(
        k ** (2 * a + 1) * binom(2 * m, m + k) ** r * binom(2 * n, n + k) ** s
        for k in range(1, m + 1)
    )
    divisor = Fraction(
        fact(2 * m) * fact(2 * n), 2 * fact(m + n) * fact(m - 1) * fact(n - 1) * gcd(m, n)
    )
    return total, [divisor]


def _cor_4n(n, r, s, a):
    total = sum(
        k ** (2 * a + 1) * binom(4 * n, 2 * n + k) ** r * binom(2 * n, n + k) ** s
        for k in range(1, n + 1)
    )
    return total, [n * binom(4 * n, n)]


def _cor_6n(n, r, s, a):
    total = sum(
        k ** (2 * a + 1) * binom(6 * n, 3 * n + k) ** r * binom(2 * n, n + k) ** s
        for k in range(1, n + 1)
    )
    divisor = Fraction(fact(6 * n) * fact(2 * n - 1), fact(4 * n) * fact(3 * n - 1) * fact(n - 1))
    return total, [divisor]


def _cor_n2n(n, r, s, t):
    total = sum(
        k**r * catalan_entry_or_zero(2 * n, k) ** s * catalan_entry_or_zero(n, k) ** t
        for k in range(1, n + 1)
    )
    return total, [binom(4 * n - 1, n - 1)]


def _cor_246(r, s, t, n, a):
    total = sum(
        k ** (2 * a + 1)
        * binom(6 * n, 3 * n + k) ** r
        * binom(4 * n, 2 * n + k) ** s
        * binom(2 * n, n + k) ** t
        for k in range(1, n + 1)
    )
    return total, [n * binom(6 * n, n), 3 * n * binom(6 * n, 3 * n)]


def _cor_248(r, s, t, n, a):
    total = sum(
        k ** (2 * a + 1)
        * binom(8 * n, 4 * n + k) ** r
        * binom(4 * n, 2 * n + k) ** s
        * binom(2 * n, n + k) ** t
        for k in range(1, n + 1)
    )
    return total, [2 * n * binom(8 * n, 3 * n)]


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@dataclass(frozen=True)
class Corollary:
    id: str
    params: tuple[str, ...]
    compute: Callable
    # parameters whose value may be 0; all others are >= 1
    nonnegative: tuple[str, ...] = ("a",)
    condition: Callable[..., bool] | None = None
    description: str = ""

    def valid(self, values: tuple) -> bool:
        if len(values) != len(self.params):
            return False
        for name, v in zip(self.params, values):
            if v < (0 if name in self.nonnegative else 1):
                return False
        return self.condition is None or self.condition(*values)


COROLLARIES: dict[str, Corollary] = {
    c.id: c
    for c in (
        Corollary("6.1", ("m", "n", "r", "a"), _cor_pair,
                  description="2 sum k^(2a+1) C(m+n,m+k)^r C(m+n,n+k)^r"),
        Corollary("6.2", ("l", "m", "n", "r", "a"), _cor_triple,
                  description="three-row cyclic power sum, three divisors"),
        Corollary("nn+1", ("r", "s", "n", "a"), _cor_nn1,
                  description="rows 2n+1, 2n+1, 2n"),
        Corollary("restated", ("r", "n1", "n2", "n3"), _cor_restated, nonnegative=("r",),
                  description="central-binomial restatement with n_(m+1) = 0, m = 3"),
        Corollary("mn", ("m", "n", "r", "s", "a"), _cor_mn,
                  description="C(2m,m+k)^r C(2n,n+k)^s"),
        Corollary("mn-4n", ("n", "r", "s", "a"), _cor_4n,
                  description="C(4n,2n+k)^r C(2n,n+k)^s, divisor n C(4n,n)"),
        Corollary("mn-6n", ("n", "r", "s", "a"), _cor_6n,
                  description="C(6n,3n+k)^r C(2n,n+k)^s"),
        Corollary("n2n", ("n", "r", "s", "t"), _cor_n2n, nonnegative=("r",),
                  condition=lambda n, r, s, t: _is_power_of_two(n) and (r + s + t) % 2 == 1,
                  description="B(2n,k)^s B(n,k)^t, n a power of two"),
        Corollary("rst-246n", ("r", "s", "t", "n", "a"), _cor_246,
                  description="rows 6n, 4n, 2n; divisors n C(6n,n) and 3n C(6n,3n)"),
        Corollary("rst-248n", ("r", "s", "t", "n", "a"), _cor_248,
                  description="rows 8n, 4n, 2n; divisor 2n C(8n,3n)"),
    )
}

ALIASES = {
    "6.3": "nn+1",
    "6.4": "restated",
    "6.5": "mn",
    "6.6": "n2n",
    "6.7": "rst-246n",
    "6.8": "rst-248n",
}


def get_corollary(cid: str) -> Corollary:
    cid = ALIASES.get(cid, cid)
    try:
        return COROLLARIES[cid]
    except KeyError:
        raise KeyError(f"unknown corollary {cid!r}") from None


def corollary_divisibility_report(cid: str, params) -> list[DivisibilityVerdict]:
    """One verdict per declared divisor; the corollary holds iff all are integers."""
    cor = get_corollary(cid)
    params = tuple(int(p) for p in params)
    if not cor.valid(params):
        raise ValueError(f"invalid parameters {params} for corollary {cor.id} {cor.params}")
    total, divisors = cor.compute(*params)
    return [
        DivisibilityVerdict(total, d, label=f"{cor.id}{params}[{j}]")
        for j, d in enumerate(divisors)
    ]


def corollary_grid(cid: str, base_max: int = 4, exp_max: int = 3, a_max: int = 3) -> Iterator[tuple]:
    """Valid parameter tuples with base parameters <= base_max and exponents <= exp_max."""
    cor = get_corollary(cid)
    exponent_names = {"r", "s", "t"} if cor.id != "restated" else set()
    axes = []
    for name in cor.params:
        lo = 0 if name in cor.nonnegative else 1
        if cor.id == "restated" and name == "r":
            hi = a_max
        elif name == "a":
            hi = a_max
        elif name in exponent_names:
            hi = exp_max
        else:
            hi = base_max
        axes.append(range(lo, hi + 1))
    for values in product(*axes):
        if cor.valid(values):
            yield values
