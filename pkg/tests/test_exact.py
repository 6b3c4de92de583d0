import threading
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from catalan_sums.exact import (
    FactorialTable, as_fraction, binom, binom_gen, bit_count, is_integer, p_adic_valuation, pochhammer,
)


@given(st.integers(0, 300), st.integers(-5, 305))
def test_binom_matches_math_comb(n, k):
    assert binom(n, k) == (comb(n, k) if 0 <= k <= n else 0)


def test_binom_rejects_negative_upper():
    with pytest.raises(ValueError):
        binom(-1, 0)


@given(st.integers(-40, 40), st.integers(0, 25))
def test_binom_gen_matches_sympy(a, k):
    assert binom_gen(a, k) == int(sympy.binomial(a, k))


@given(st.integers(-30, 30), st.integers(0, 12))
def test_pochhammer_matches_sympy(a, n):
    assert pochhammer(a, n) == int(sympy.rf(a, n))


def test_pochhammer_through_zero():
    assert pochhammer(-3, 5) == 0
    assert pochhammer(-3, 3) == -6


def test_bit_count():
    assert [bit_count(n) for n in (1, 2, 3, 7, 8, 255, 256)] == [1, 1, 2, 3, 1, 8, 1]
    with pytest.raises(ValueError):
        bit_count(0)


@given(st.integers(1, 10**12), st.sampled_from([2, 3, 5, 7]))
def test_valuation_against_factorint(N, p):
    assert p_adic_valuation(N, p) == sympy.factorint(N).get(p, 0)


def test_valuation_of_rationals():
    assert p_adic_valuation(Fraction(3, 8), 2) == -3
    assert p_adic_valuation(Fraction(-12, 5), 2) == 2
    with pytest.raises(ValueError):
        p_adic_valuation(0, 2)


def test_fraction_helpers():
    assert as_fraction(3) == Fraction(3)
    assert is_integer(Fraction(6, 3)) and not is_integer(Fraction(1, 2))


def test_factorial_table_concurrent_growth():
    table = FactorialTable(4)
    errors = []

    def worker(top):
        try:
            for i in range(top):
                assert table[i] * table.reciprocal(i) == 1
        except AssertionError as exc:  # pragma: no cover
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(300 + 7 * t,)) for t in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    assert table[200] == sympy.factorial(200)
    assert table.reciprocal(-1) == 0
