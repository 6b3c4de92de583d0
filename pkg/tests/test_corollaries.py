from fractions import Fraction

import pytest
import sympy

from catalan_sums import corollaries


def test_aliases_resolve():
    assert corollaries.get_corollary("6.3").id == "nn+1"
    assert corollaries.get_corollary("6.8").id == "rst-248n"
    with pytest.raises(KeyError):
        corollaries.get_corollary("6.99")


@pytest.mark.parametrize("cid", sorted(corollaries.COROLLARIES))
def test_small_grid_divides(cid):
    grid = list(corollaries.corollary_grid(cid, base_max=3, exp_max=2, a_max=2))
    assert grid
    for params in grid:
        assert all(v.divides for v in corollaries.corollary_divisibility_report(cid, params)), params


def test_pair_corollary_by_hand():
    # m=n=1, r=1, a=0: 2 * 1 * C(2,2) C(2,2) = 2; divisor lcm-term 1*1/1*C(2,1) = 2
    (v,) = corollaries.corollary_divisibility_report("6.1", (1, 1, 1, 0))
    assert v.sum == 2 and v.divisor == 2 and v.quotient == 1


def test_mn_divisor_is_integral_and_matches_sympy():
    for m in range(1, 6):
        for n in range(1, 6):
            total, (d,) = corollaries._cor_mn(m, n, 1, 1, 0)
            f = sympy.factorial
            ref = f(2 * m) * f(2 * n) / (2 * f(m + n) * f(m - 1) * f(n - 1) * sympy.gcd(m, n))
            assert d == Fraction(str(ref))


def test_power_of_two_condition():
    cor = corollaries.get_corollary("n2n")
    assert cor.valid((4, 0, 1, 2)) and not cor.valid((3, 0, 1, 2)) and not cor.valid((4, 1, 1, 2))
    with pytest.raises(ValueError):
        corollaries.corollary_divisibility_report("n2n", (3, 0, 1, 2))
