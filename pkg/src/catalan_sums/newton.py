"""Newton divided differences over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class NewtonTableau:
    nodes: tuple[Fraction, ...]
    coefficients: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        """Evaluate the Newton form by Horner's scheme."""
        x = Fraction(x)
        acc = Fraction(0)
        for c, node in zip(reversed(self.coefficients), reversed(self.nodes)):
            acc = acc * (x - node) + c
        return acc

    def basis_value(self, k: int, x) -> Fraction:
        """``prod_{i<k} (x - x_i)``."""
        x = Fraction(x)
        p = Fraction(1)
        for node in self.nodes[:k]:
            p *= x - node
        return p


def newton_coefficients(nodes: Sequence, values: Sequence) -> NewtonTableau:
    """Divided-difference coefficients ``f[x_0], f[x_0, x_1], ...``."""
    if len(nodes) != len(values) or not nodes:
        raise ValueError("nodes and values must be nonempty and of equal length")
    xs = tuple(Fraction(x) for x in nodes)
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be pairwise distinct")
    table = [Fraction(v) for v in values]
    coefficients = [table[0]]
    for level in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        coefficients.append(table[0])
    return NewtonTableau(xs, tuple(coefficients))


def lagrange_divided_difference(nodes: Sequence, values: Sequence) -> Fraction:
    """The top divided difference via ``sum_i f(x_i) / prod_{j != i} (x_i - x_j)``."""
    xs = [Fraction(x) for x in nodes]
    total = Fraction(0)
    for i, (xi, fi) in enumerate(zip(xs, values)):
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                denom *= xi - xj
        total += Fraction(fi) / denom
    return total
