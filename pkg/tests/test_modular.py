from math import gcd

import pytest
import sympy
import sympy.ntheory
from hypothesis import given, strategies as st

from catalan_sums import modular
from catalan_sums.exact import binom


@given(st.integers(0, 400), st.integers(0, 400), st.sampled_from([2, 3, 5, 7, 11, 13, 97]))
def test_lucas_matches_direct(a, b, p):
    expected = binom(a, b) % p if b <= a else 0
    assert modular.lucas_binom_mod_p(a, b, p) == expected


def test_lucas_rejects_composite_modulus():
    with pytest.raises(ValueError):
        modular.lucas_binom_mod_p(10, 3, 4)


@given(st.integers(1, 5000))
def test_prime_power_and_factors_against_sympy(n):
    f = sympy.factorint(n)
    expected = next(iter(f.items())) if len(f) == 1 else None
    assert modular.is_prime_power(n) == expected
    assert modular.prime_factors(n) == sorted(f)
    assert modular.is_prime(n) == sympy.isprime(n)


def test_base_digits_round_trip():
    d = modular.BaseDigits.of(2024, 7)
    assert d.value == 2024
    assert d.digits == tuple(sympy.ntheory.digits(2024, 7)[1:][::-1])


@given(st.integers(1, 600))
def test_coprime_condition_matches_gcd(n):
    assert modular.central_coprime_condition(n) == (gcd(binom(2 * n - 1, n), n) == 1)


def test_prime_powers_satisfy_condition():
    for n in [2, 3, 4, 8, 9, 25, 27, 49, 64, 81, 121, 128]:
        assert modular.central_coprime_condition(n)
        assert modular.central_congruence_mod_primes(n)


def test_congruence_mod_n_reading_fails_for_some_prime_powers():
    assert [n for n in range(2, 70) if modular.is_prime_power(n) and not modular.central_congruence_mod_n(n)] == [
        4, 8, 16, 27, 32, 64,
    ]


def test_coprime_list_below_500():
    computed = modular.scan_coprime_non_prime_powers(500)
    reference = [n for n in range(2, 500) if len(sympy.factorint(n)) > 1 and sympy.gcd(sympy.binomial(2 * n - 1, n), n) == 1]
    assert computed == reference
    assert len(computed) == 21 and 185 in computed and 327 in computed
    assert 175 not in computed and 317 not in computed  # 317 is prime; gcd(C(349,175), 175) = 7


def test_prime_power_verdicts_and_errors():
    assert modular.theorem14_verdict(9, 2, 3).at_most_half
    with pytest.raises(modular.ParityError):
        modular.theorem14_verdict(9, 1, 3)
    with pytest.raises(modular.ConditionError):
        modular.theorem14_verdict(6, 0, 1)
