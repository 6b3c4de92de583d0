"""Lucas residues, prime powers and the coprimality condition behind the prime-power theorem."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exact import binom
from .results import DivisibilityVerdict
from .triangle import catalan_power_sum


class ParityError(ValueError):
    """Exponents violate the required parity condition."""


class ConditionError(ValueError):
    """``n`` fails the gcd condition the theorem relies on."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors by trial division, ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class BaseDigits:
    p: int
    digits: tuple[int, ...]  # least significant first

    @classmethod
    def of(cls, value: int, p: int) -> "BaseDigits":
        if value < 0:
            raise ValueError("digits of a negative number")
        digits = []
        while value:
            value, d = divmod(value, p)
            digits.append(d)
        return cls(p, tuple(digits))

    @property
    def value(self) -> int:
        return sum(d * self.p**i for i, d in enumerate(self.digits))


def lucas_binom_mod_p(a: int, b: int, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a < 0 or b < 0:
        raise ValueError("Lucas residues need nonnegative arguments")
    result = 1
    while a or b:
        a, ai = divmod(a, p)
        b, bi = divmod(b, p)
        if bi > ai:
            return 0
        result = result * binom(ai, bi) % p
    return result


def is_prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    factors = prime_factors(n)
    if len(factors) != 1:
        return None
    p = factors[0]
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return p, e


def central_coprime_via_lucas(n: int) -> bool:
    return all(lucas_binom_mod_p(2 * n - 1, n, p) != 0 for p in prime_factors(n))


def central_coprime_condition(n: int) -> bool:
    """``gcd(C(2n-1, n), n) == 1``, decided by Lucas residues and checked by a direct gcd."""
    if n < 1:
        raise ValueError("n must be positive")
    via_lucas = central_coprime_via_lucas(n)
    direct = gcd(binom(2 * n - 1, n), n) == 1
    assert via_lucas == direct, f"Lucas and direct gcd disagree at n={n}"
    return via_lucas


def central_congruence_mod_n(n: int) -> bool:
    """The stronger reading ``C(2n-1, n) = 1 (mod n)``."""
    return binom(2 * n - 1, n) % n == 1 % n


def central_congruence_mod_primes(n: int) -> bool:
    """``C(2n-1, n) = 1 (mod p)`` for every prime ``p | n``."""
    return all(lucas_binom_mod_p(2 * n - 1, n, p) == 1 for p in prime_factors(n))


def scan_coprime_non_prime_powers(limit: int) -> list[int]:
    """Non-prime-powers ``n < limit`` (``n >= 2``) satisfying the gcd condition."""
    return [
        n
        for n in range(2, limit)
        if is_prime_power(n) is None and central_coprime_condition(n)
    ]


def theorem14_verdict(n: int, r: int, s: int) -> DivisibilityVerdict:
    if s < 1 or r < 0:
        raise ValueError("need r >= 0 and s >= 1")
    if (r - s) % 2 == 0:
        raise ParityError(f"r and s must have opposite parity, got r={r}, s={s}")
    if not central_coprime_condition(n):
        raise ConditionError(f"gcd(C(2n-1, n), n) != 1 for n={n}")
    return DivisibilityVerdict(
        catalan_power_sum(n, r, s), binom(2 * n, n), label=f"prime-power(n={n},r={r},s={s})"
    )
