import pytest
import sympy

from catalan_sums import qcatalan
from catalan_sums.qpoly import IntPolynomial
from catalan_sums.triangle import catalan_entry

q = sympy.Symbol("q")


def _entry_sympy(n, k):
    g = sympy.Integer(1)
    M, N = 2 * n, n - k
    for i in range(1, N + 1):
        g *= (1 - q ** (M - N + i)) / (1 - q**i)
    expr = sympy.cancel((1 - q**k) / (1 - q**n) * g)
    return IntPolynomial(reversed(sympy.Poly(expr, q).all_coeffs()))


@pytest.mark.parametrize("n,k", [(1, 1), (3, 2), (5, 1), (6, 4), (8, 3), (10, 7)])
def test_entry_matches_sympy_and_specializes(n, k):
    entry = qcatalan.q_catalan_entry(n, k)
    assert entry == _entry_sympy(n, k)
    assert entry(1) == catalan_entry(n, k)


def test_factorization_example_and_overlap():
    assert str(qcatalan.q_catalan_factorization(6, 4)) == "Phi_4^2 * Phi_11 * Phi_12"
    assert qcatalan.factorization_overlap(3, 2) == [2]
    assert qcatalan.factorization_overlap(6, 4) == [4]


def test_factorization_exact_with_positive_sign():
    for n in range(1, 16):
        for k in range(1, n + 1):
            assert qcatalan.factorization_sign(n, k) == 1
            assert qcatalan.factorization_check(n, k)


def test_q_shapiro():
    assert all(qcatalan.q_shapiro_check(n) for n in range(1, 15))
    lhs, rhs = qcatalan.q_shapiro_sides(2)
    # at q = 1 both sides are the row sum C(4, 2) / 2
    assert lhs(1) == 3 == rhs(1)


def test_domain():
    with pytest.raises(ValueError):
        qcatalan.q_catalan_entry(3, 0)
    with pytest.raises(ValueError):
        qcatalan.q_catalan_factorization(3, 4)
