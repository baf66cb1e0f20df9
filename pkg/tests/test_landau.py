import math

import pytest
from hypothesis import given, settings, strategies as st

from mtrank.landau import (
    AlphaValue,
    alpha,
    alpha_envelope,
    brute_force_g,
    brute_force_g1,
    envelope_ratio,
    landau_g,
    landau_g1,
    landau_table,
    massias_check,
    primes_up_to,
    sandwich_check,
)

from oracles import brute_g, brute_g1


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 6), (10, 30)])
def test_landau_g_examples(n, expected):
    assert landau_g(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 2), (3, 6), (5, 12)])
def test_landau_g1_examples(n, expected):
    assert landau_g1(n) == expected


@pytest.mark.parametrize("n", range(26))
def test_dp_matches_partition_enumeration(n):
    assert landau_g(n) == brute_g(n)
    assert landau_g1(n) == brute_g1(n)


@pytest.mark.parametrize("n", range(16))
def test_library_brute_force_matches_test_oracle(n):
    assert brute_force_g(n) == brute_g(n)
    assert brute_force_g1(n) == brute_g1(n)


def test_table_invariants():
    t = landau_table(600)
    assert t.g_values[0] == t.g1_values[0] == 1
    for n in range(t.max_n):
        assert t.g(n) <= t.g(n + 1)
        assert t.g1(n) <= t.g1(n + 1)
    assert all(a <= b for a, b in zip(t.g_values, t.g1_values))


def test_table_is_cached():
    assert landau_table(10) is landau_table(200)
    assert landau_table(300).max_n >= 300


def test_known_large_value():
    # g(100) from the published table of Landau's function (OEIS A000793)
    assert landau_g(100) == 232792560


def test_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []


@given(st.lists(st.integers(2, 40), max_size=8))
def test_g1_dominates_any_admissible_multiset(parts):
    cost = sum(a - 1 for a in parts)
    assert math.lcm(*parts) <= landau_g1(cost)


@given(st.lists(st.integers(1, 40), max_size=8))
def test_g_dominates_any_partition(parts):
    assert math.lcm(*parts) <= landau_g(sum(parts))


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        landau_g(-1)
    with pytest.raises(TypeError):
        landau_g1(2.0)


def test_alpha_examples():
    a2 = alpha(2)
    assert isinstance(a2, AlphaValue)
    assert a2.alpha == pytest.approx(math.log2(3) / math.sqrt(2 * math.log(2)), rel=1e-12)
    assert a2.alpha == pytest.approx(1.3462, abs=1e-4)
    # log2(6) / sqrt(3 ln 3) = 1.42387...
    assert alpha(3).alpha == pytest.approx(1.42387, abs=5e-5)


@pytest.mark.parametrize("n", range(2, 9))
def test_alpha_below_two_small(n):
    assert alpha(n).alpha < 2


def test_alpha_fields_consistent():
    for n in (2, 17, 400):
        a = alpha(n)
        assert a.n == n and a.alpha > 0
        assert a.log2_g1 == pytest.approx(math.log2(landau_g1(n)))
        assert a.alpha == pytest.approx(a.log2_g1 / math.sqrt(n * math.log(n)))
        assert a.envelope == alpha_envelope(n)


def test_alpha_rejects_small_n():
    with pytest.raises(ValueError):
        alpha(1)


def test_envelope():
    assert alpha_envelope(9) < 2
    assert envelope_ratio(10) > envelope_ratio(100)
    assert alpha_envelope(10**6) == pytest.approx(1.05314 / math.log(2), abs=0.01)


@given(st.floats(1.01, 1e6), st.floats(1.0001, 10))
def test_envelope_ratio_decreasing(x, factor):
    assert envelope_ratio(x * factor) <= envelope_ratio(x)


@pytest.mark.parametrize("n", [1, 4, 25])
def test_sandwich_examples(n):
    assert sandwich_check(n)


@pytest.mark.parametrize("n", [2, 100, 500])
def test_massias_examples(n):
    assert massias_check(n)
