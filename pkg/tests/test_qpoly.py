import pytest
import sympy
from hypothesis import given, strategies as st

from catalan_sums.qpoly import ONE, InexactDivision, IntPolynomial, cyclotomic, gaussian_binomial

q = sympy.Symbol("q")
polys = st.lists(st.integers(-20, 20), max_size=8).map(IntPolynomial)


def _to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], q)


def _from_sympy(expr):
    return IntPolynomial(reversed(sympy.Poly(expr, q).all_coeffs()))


@given(polys, polys)
def test_ring_ops_match_sympy(a, b):
    assert _from_sympy((_to_sympy(a) * _to_sympy(b)).as_expr()) == a * b
    assert _from_sympy((_to_sympy(a) + _to_sympy(b)).as_expr()) == a + b
    assert a - a == IntPolynomial()


@given(polys, st.lists(st.integers(-5, 5), min_size=1, max_size=4).filter(lambda c: c[-1] in (1, -1)))
def test_divmod_reconstructs(a, d):
    d = IntPolynomial(d)
    quot, rem = a.divmod(d)
    assert quot * d + rem == a
    assert rem.degree < d.degree or not rem


def test_exact_division_errors():
    with pytest.raises(InexactDivision):
        IntPolynomial([1, 0, 1]).exact_div(IntPolynomial([1, 1]))
    with pytest.raises(ZeroDivisionError):
        ONE.divmod(IntPolynomial())
    with pytest.raises(ValueError):
        ONE.divmod(IntPolynomial([1, 2]))
    with pytest.raises(TypeError):
        ONE + 1.5


def test_str_and_eval():
    p = IntPolynomial([1, 1, 2, 1, 1])
    assert str(p) == "1 + q + 2*q^2 + q^3 + q^4"
    assert str(IntPolynomial([0, -1, 0, 3])) == "-q + 3*q^3"
    assert p(1) == 6 and p(2) == 1 + 2 + 8 + 8 + 16
    assert IntPolynomial([2, 1]) ** 3 == IntPolynomial([8, 12, 6, 1])


@pytest.mark.parametrize("d", list(range(1, 61)) + [105, 120, 210])
def test_cyclotomic_matches_sympy(d):
    assert cyclotomic(d) == _from_sympy(sympy.cyclotomic_poly(d, q))


@pytest.mark.parametrize("M,N", [(0, 0), (4, 2), (7, 3), (10, 5), (12, 0), (9, 9)])
def test_gaussian_matches_product_formula(M, N):
    expr = sympy.Integer(1)
    for i in range(1, N + 1):
        expr *= (1 - q ** (M - N + i)) / (1 - q**i)
    assert gaussian_binomial(M, N) == _from_sympy(sympy.cancel(expr))


def test_gaussian_edges():
    assert gaussian_binomial(5, 7) == IntPolynomial()
    with pytest.raises(ValueError):
        gaussian_binomial(-1, 0)
    assert gaussian_binomial(4, 2) == IntPolynomial([1, 1, 2, 1, 1])
