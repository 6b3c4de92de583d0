from fractions import Fraction

import pytest

from catalan_sums import conjectures as cj
from catalan_sums.exact import binom
from catalan_sums.triangle import catalan_entry


def test_families():
    assert [n for n in range(1, 20) if cj.is_2a_minus_2b(n)] == [1, 2, 3, 4, 6, 7, 8, 12, 14, 15, 16]
    assert cj.is_2a_minus_2b(12) == (4, 2)
    assert cj.is_2a_minus_2b(7, min_b=1) is None
    assert [n for n in range(1, 40) if cj.is_2a_minus_1(n) is not None] == [1, 3, 7, 15, 31]
    assert [n for n in range(1, 40) if cj.is_2a_plus_1(n) is not None] == [2, 3, 5, 9, 17, 33]
    # 3n = 2^a (2^(2b+1)+1): 3, 9, 33, ... times powers of two, over 3
    assert [n for n in range(1, 50) if cj.is_2a_times_22b1_plus_1_over_3(n)] == [1, 2, 3, 4, 6, 8, 11, 12, 16, 22, 24, 32, 43, 44, 48]


def test_cube_congruences_hold_in_family():
    for n in (7, 12, 13, 16):
        ev = cj.check_conjecture("7.2", (n, 1))
        assert ev.holds
    total = sum(catalan_entry(13, k) ** 3 for k in range(1, 14))
    assert total == 5066711735118128200 and total % binom(26, 13) == 0
    assert cj.check_conjecture("7.2", (16, 1)).value == binom(31, 16)


def test_side_conditions_skip():
    assert cj.check_conjecture("7.6", (3, 1, 1)) is None
    assert cj.check_conjecture("7.3", (2, 0, 1)) is None
    with pytest.raises(ValueError):
        cj.check_conjecture("7.1", (3,))
    with pytest.raises(KeyError):
        cj.get_conjecture("8.1")


def test_known_counterexample_to_7_6():
    # B(3,k) = 5, 4, 1 and B(6,k) = 132, 165, 110: the sum is 208120 = 473 * 440
    ev = cj.check_conjecture("7.6", (3, 1, 2))
    assert not ev.holds and ev.value == 0 and ev.expected == "220"


def test_statuses():
    assert cj.scan("7.1").status == cj.CONFIRMED
    assert cj.scan("7.2").status == cj.CONFIRMED
    r73 = cj.scan("7.3")
    assert r73.status == cj.AMBIGUOUS and r73.counterexamples and r73.alternate_counterexamples == 0
    for cid in ("7.6", "7.7", "7.8", "7.9"):
        assert cj.scan(cid).status == cj.FALSIFIED


def test_ranges():
    assert cj.resolve_ranges("7.2", {"n": [16, 7, 7]}) == {"n": [7, 16], "r": [1, 2, 3]}
    assert cj.resolve_ranges("7.1", {"n": (2, 4)})["n"] == [2, 3, 4]


def test_scan_is_worker_independent():
    one = cj.scan("7.7", workers=1, chunk_size=7)
    many = cj.scan("7.7", workers=4, chunk_size=7)
    assert one == many
    assert one.counterexamples == sorted(one.counterexamples, key=lambda c: c["tuple"])


def test_residue_helper():
    assert cj._residue(Fraction(7, 2), 3) == Fraction(1, 2)
    assert cj._congruent(Fraction(7, 2), Fraction(1, 2), 3)
