"""Dense integer polynomials in ``q``, Gaussian binomials and cyclotomic polynomials."""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable


class InexactDivision(ArithmeticError):
    pass


class IntPolynomial:
    """Integer coefficients in ascending degree; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def one_minus_q_pow(cls, e: int) -> "IntPolynomial":
        """``1 - q^e`` (zero for ``e == 0``)."""
        if e == 0:
            return cls()
        return cls([1] + [0] * (e - 1) + [-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other) -> "IntPolynomial":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return _lift(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        result, base = IntPolynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, d: int) -> "IntPolynomial":
        """Multiply by ``q^d``."""
        return IntPolynomial([0] * d + list(self.coeffs)) if self.coeffs else self

    def divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division; the divisor's leading coefficient must be a unit."""
        d = divisor.coeffs
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        lead = d[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        if len(rem) < len(d):
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - len(d) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(d) - 1] * lead  # lead is its own inverse
            quot[i] = c
            if c:
                for j, y in enumerate(d):
                    rem[i + j] -= c * y
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(divisor)
        if r:
            raise InexactDivision(f"nonzero remainder {r} dividing {self} by {divisor}")
        return q

    __floordiv__ = exact_div

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = "q" if i == 1 else f"q^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _lift(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot combine IntPolynomial with {type(x).__name__}")


ONE = IntPolynomial([1])
ZERO = IntPolynomial()


@lru_cache(maxsize=4096)
def gaussian_binomial(M: int, N: int) -> IntPolynomial:
    """``[M, N]_q`` built as ``G_i = G_(i-1) (1 - q^(M-N+i)) / (1 - q^i)``; each step is exact."""
    if M < 0:
        raise ValueError("upper argument must be nonnegative")
    if N < 0 or N > M:
        return ZERO
    g = ONE
    for i in range(1, N + 1):
        g = (g * IntPolynomial.one_minus_q_pow(M - N + i)).exact_div(IntPolynomial.one_minus_q_pow(i))
    return g


_CYCLOTOMIC: dict[int, IntPolynomial] = {}
_CYCLOTOMIC_LOCK = threading.Lock()


def cyclotomic(d: int) -> IntPolynomial:
    """``Phi_d(q)`` with ``Phi_1 = q - 1``, by dividing ``q^d - 1`` by the lower factors."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    cached = _CYCLOTOMIC.get(d)
    if cached is not None:
        return cached
    poly = IntPolynomial.monomial(d) - ONE
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic(e))
    with _CYCLOTOMIC_LOCK:
        return _CYCLOTOMIC.setdefault(d, poly)
