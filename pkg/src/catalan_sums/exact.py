"""Exact integer and rational kernel.

Python's ``int`` is the unbounded integer type and :class:`fractions.Fraction`
is the reduced rational type; everything in the package is built on those two.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "Fraction",
    "FactorialTable",
    "FACTORIALS",
    "binom",
    "binom_gen",
    "pochhammer",
    "bit_count",
    "p_adic_valuation",
    "as_fraction",
    "is_integer",
]


class FactorialTable:
    """Append-only cache of ``0!, 1!, ..., N!``.

    Extension happens under a lock; readers receive entries of the published
    prefix, which never changes once written.
    """

    def __init__(self, size: int = 64):
        self._values = [1]
        self._lock = threading.Lock()
        self.extend(size)

    def __len__(self) -> int:
        return len(self._values)

    def extend(self, size: int) -> None:
        if size < len(self._values):
            return
        with self._lock:
            values = list(self._values)
            for i in range(len(values), size + 1):
                values.append(values[-1] * i)
            self._values = values

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise ValueError(f"factorial of negative integer {i}")
        if i >= len(self._values):
            self.extend(max(i, 2 * len(self._values)))
        return self._values[i]

    def reciprocal(self, i: int) -> Fraction:
        """``1/i!`` with the convention ``1/i! = 0`` for ``i < 0``."""
        if i < 0:
            return Fraction(0)
        return Fraction(1, self[i])


FACTORIALS = FactorialTable()


def binom(n: int, k: int) -> int:
    """Binomial coefficient for ``n >= 0``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binom requires a nonnegative upper argument, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_gen(a: int, k: int) -> int:
    """Generalized binomial ``a(a-1)...(a-k+1)/k!`` for any integer ``a``.

    Returns 0 for ``k < 0``.  For negative ``a`` this uses
    ``C(a, k) = (-1)^k C(k - a - 1, k)``.
    """
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k) if k <= a else 0
    value = math.comb(k - a - 1, k)
    return -value if k & 1 else value


def pochhammer(a: int, n: int) -> int:
    """Rising factorial ``a(a+1)...(a+n-1)``; 1 when ``n == 0``."""
    if n < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {n}")
    if a <= 0 < a + n:
        return 0
    if a > 0:
        return FACTORIALS[a + n - 1] // FACTORIALS[a - 1]
    # all factors negative: a..a+n-1 <= -1
    value = FACTORIALS[-a] // FACTORIALS[-a - n]
    return -value if n & 1 else value


def bit_count(N: int) -> int:
    """Number of ones in the binary expansion of ``N >= 1``."""
    if N < 1:
        raise ValueError(f"bit_count requires N >= 1, got {N}")
    return N.bit_count()


def p_adic_valuation(N: int | Fraction, p: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``N``.

    Rationals are accepted; their valuation may be negative.
    """
    N = Fraction(N)
    if N == 0:
        raise ValueError("p-adic valuation of zero is undefined")
    if p < 2:
        raise ValueError(f"not a prime: {p}")
    e = 0
    num, den = abs(N.numerator), N.denominator
    while num % p == 0:
        num //= p
        e += 1
    while den % p == 0:
        den //= p
        e -= 1
    return e


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def is_integer(x) -> bool:
    return as_fraction(x).denominator == 1
