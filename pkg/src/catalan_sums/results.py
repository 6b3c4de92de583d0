"""Result records shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

INTEGER = "integer"
HALF_INTEGER = "half_integer"
OTHER = "other"


class IdentityMismatch(AssertionError):
    """Two computations that must agree exactly did not."""


def render(value: Any) -> str:
    """Exact decimal or ``p/q`` rendering; polynomials use their own ``str``."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass(frozen=True)
class IdentityCheckResult:
    identity: str
    params: tuple
    lhs: Any
    rhs: Any
    equal: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "equal", self.lhs == self.rhs)

    def __bool__(self) -> bool:
        return self.equal


def classify(q: Fraction) -> str:
    if q.denominator == 1:
        return INTEGER
    if q.denominator == 2:
        return HALF_INTEGER
    return OTHER


@dataclass(frozen=True)
class DivisibilityVerdict:
    """A sum, the quantity it is claimed divisible by, and the reduced quotient."""

    sum: Fraction
    divisor: Fraction
    label: str = ""
    quotient: Fraction = field(init=False)
    classification: str = field(init=False)

    def __post_init__(self):
        s, d = Fraction(self.sum), Fraction(self.divisor)
        if d == 0:
            raise ZeroDivisionError("divisor is zero")
        object.__setattr__(self, "sum", s)
        object.__setattr__(self, "divisor", d)
        q = s / d
        object.__setattr__(self, "quotient", q)
        object.__setattr__(self, "classification", classify(q))

    @property
    def divides(self) -> bool:
        return self.classification == INTEGER

    @property
    def at_most_half(self) -> bool:
        """Integer or half-integer quotient."""
        return self.classification in (INTEGER, HALF_INTEGER)
