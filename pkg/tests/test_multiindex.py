from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from catalan_sums import multiindex
from catalan_sums.results import HALF_INTEGER, INTEGER

comps = st.lists(st.integers(1, 5), min_size=1, max_size=5).map(tuple)


def _s_sympy(r, a):
    m = len(a)
    total = 0
    for k in range(1, a[0] + 1):
        term = k ** (2 * r + 1)
        for i in range(m):
            term *= sympy.binomial(a[i] + a[(i + 1) % m], a[i] + k)
        total += term
    return sympy.Rational(total, a[0] * sympy.binomial(a[0] + a[-1], a[0]))


def test_point_values():
    assert multiindex.s_value(3, (3, 3, 2, 3, 3)) == Fraction(10233, 2)
    assert multiindex.s_value(5, (3, 3, 2, 2, 2)) == 2448


@settings(max_examples=80, deadline=None)
@given(comps, st.integers(0, 4))
def test_s_value_matches_sympy_and_is_at_most_half(a, r):
    value = multiindex.s_value(r, a)
    assert value == Fraction(str(_s_sympy(r, a)))
    assert multiindex.s_sum(r, a).classification in (INTEGER, HALF_INTEGER)
    assert multiindex.s_via_rewriting(r, a) == value


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=3, max_size=5).map(tuple), st.integers(0, 4))
def test_recurrence(a, r):
    assert multiindex.s_recurrence_check(r, a)


def test_single_entry_cycle():
    # m=1: sum k C(4, 2+k) = 1*4 + 2*1 over 2 C(4, 2)
    assert multiindex.s_value(0, (2,)) == Fraction(1 * 4 + 2 * 1, 2 * 6)


@given(st.integers(1, 7), st.integers(1, 7), st.integers(1, 7), st.integers(-8, 8))
def test_pfaff_saalschutz(n1, n2, n3, k):
    assert multiindex.pfaff_check(n1, n2, n3, k)


def test_lambda_chains_are_lexicographic():
    chains = list(multiindex.lambda_chains(3, 2, 1))
    assert chains == sorted(chains, reverse=True)
    assert len(chains) == 6
    assert all(c[0] >= c[1] for c in chains)


@pytest.mark.parametrize("a", [(1, 1, 1), (2, 3, 1), (3, 2, 2, 1), (4, 4, 4), (2, 1, 3, 2)])
def test_chain_sums_and_gjz(a):
    assert multiindex.lambda_sum_check(a, 1)
    assert multiindex.lambda_sum_check(a, 3)
    assert multiindex.gjz_alternating_check(a)


def test_restated_closures_integral():
    for a in [(1, 2, 3), (3, 1, 2), (2, 2), (4, 1, 4, 2)]:
        for r in range(4):
            for closure in ("zero", "cyclic"):
                assert multiindex.restated_verdict(r, a, closure).divides


def test_bad_inputs():
    with pytest.raises(ValueError):
        multiindex.CompositionIndex([])
    with pytest.raises(ValueError):
        multiindex.CompositionIndex([2, 0])
    with pytest.raises(ValueError):
        multiindex.s_recurrence_rhs(1, (2, 2))
    with pytest.raises(ValueError):
        multiindex.lambda_sum_rhs((2, 2, 2), 5)
    with pytest.raises(ValueError):
        multiindex.restated_value(1, (2, 2), closure="open")
