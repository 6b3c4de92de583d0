import pytest
import sympy
from hypothesis import given, strategies as st

from catalan_sums.triangle import (
    catalan_entry, catalan_entry_or_zero, catalan_number, catalan_power_sum, catalan_row, central_binom,
    shapiro_row_sum_check,
)


def test_row_six():
    assert catalan_row(6) == [132, 165, 110, 44, 10, 1]


def test_first_column_is_catalan():
    assert [catalan_entry(n, 1) for n in range(1, 12)] == [int(sympy.catalan(n)) for n in range(1, 12)]
    assert [catalan_number(j) for j in range(10)] == [int(sympy.catalan(j)) for j in range(10)]


@given(st.integers(1, 60))
def test_row_sum_is_half_central(n):
    assert sum(catalan_row(n)) * 2 == central_binom(n)


def test_shapiro_small_rows():
    # n=2: 1*C(4,1) + 2*C(4,0) = 6 = (2/2) C(4,2)
    check = shapiro_row_sum_check(2)
    assert check.equal and check.lhs == 6


def test_range_errors():
    with pytest.raises(ValueError):
        catalan_entry(3, 4)
    assert catalan_entry_or_zero(3, 4) == 0


def test_six_row_power_sum_divisible_by_462():
    for r, s in [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4)]:
        assert catalan_power_sum(6, r, s) % 462 == 0
