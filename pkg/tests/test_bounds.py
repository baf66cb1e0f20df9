import math
from fractions import Fraction as Q
from math import comb

import pytest
from hypothesis import given, strategies as st

from mtrank.bounds import (
    BoundKind,
    char_count_bound,
    commutative_rank_bound,
    count_distinct_characters,
    dim_bound,
    division_field_exponent,
    general_rank_bound,
    hodge_split,
    product_rank_bound,
    triple_commutative_check,
    triple_noncommutative_check,
    triple_rank_bound,
)
from mtrank.landau import landau_g1
from mtrank.rootsys import SimpleType, admissible_types, fundamental_weight, minuscule_catalog, weyl_orbit

from oracles import brute_g1

H = Q(1, 2)


def test_char_count_bound():
    assert char_count_bound(1) == 1
    assert char_count_bound(5) == 16
    for n in range(1, 12):
        assert char_count_bound(n + 1) == 2**n
    with pytest.raises(ValueError):
        char_count_bound(0)


def test_dim_bound():
    assert dim_bound(1, 1) == 1
    assert dim_bound(7, 1) == 2**6
    assert dim_bound(5, 3) == 48
    with pytest.raises(ValueError):
        dim_bound(3, 0)


@pytest.mark.parametrize("n", range(3, 40, 2))
def test_dim_bound_at_multiplicity_n(n):
    # n * 2**(n-1) >= 2n * C(n, (n-1)/2) only once 2**(n-2) >= C(n, r), i.e. n >= 9
    holds = dim_bound(n, n) >= 2 * n * comb(n, (n - 1) // 2)
    assert holds == (n >= 9)


def test_count_distinct_characters():
    assert count_distinct_characters([]) == 0
    assert count_distinct_characters([(H, -H), (Q(2, 4), Q(-1, 2)), (-H, H)]) == 2
    b3 = weyl_orbit(SimpleType("B", 3), (H, H, H))
    assert count_distinct_characters(b3) == 8 <= char_count_bound(4)
    a4 = weyl_orbit(SimpleType("A", 4), fundamental_weight(SimpleType("A", 4), 2))
    assert count_distinct_characters(a4) == 10 <= char_count_bound(5)


@pytest.mark.parametrize("t", admissible_types(10), ids=str)
def test_catalog_characters_within_bound(t):
    for rep in minuscule_catalog(t):
        orbit = weyl_orbit(t, rep.highest_weight)
        assert count_distinct_characters(orbit) <= char_count_bound(t.rank + 1)


def test_commutative_examples():
    r = commutative_rank_bound(1)
    assert (r.min_rank, r.equality, r.bound_kind) == (2, True, BoundKind.COMMUTATIVE)
    for n in range(1, 30):
        r = commutative_rank_bound(2 ** (n - 1))
        assert r.min_rank == n + 1 and r.equality
    r = commutative_rank_bound(5)
    assert (r.min_rank, r.witness_lhs, r.witness_rhs, r.equality) == (5, 8, 5, False)
    with pytest.raises(ValueError):
        commutative_rank_bound(0)


@given(st.integers(1, 2**200))
def test_commutative_min_rank_is_tight(g):
    r = commutative_rank_bound(g)
    n = r.min_rank
    assert 2 ** (n - 3) < g <= 2 ** (n - 2) or (g == 1 and n == 2)
    assert r.witness_lhs >= r.witness_rhs == g
    # float cross-check away from powers of two, while doubles still
    # separate log2(2**k + 1) from k
    if g & (g - 1) and g < 2**40:
        assert n == math.ceil(math.log2(g) + 2)
    assert r.equality == (g & (g - 1) == 0)


def test_triple_checks():
    assert triple_commutative_check(1, 1)
    for n in range(1, 20):
        assert triple_commutative_check(n + 1, 2**n)
        assert not triple_commutative_check(n, 2**n)
    assert not triple_commutative_check(3, 5)
    assert triple_noncommutative_check(1, 1, 1)
    assert not triple_noncommutative_check(4, 1, 16)


@given(st.integers(1, 60), st.integers(1, 2**70))
def test_u_one_degenerates(rank, dim):
    assert triple_noncommutative_check(rank, 1, dim) == triple_commutative_check(rank, dim)


@given(st.integers(1, 2**40), st.integers(1, 50))
def test_triple_rank_bound_is_minimal(dim, u):
    r = triple_rank_bound(dim, u)
    assert triple_noncommutative_check(r.min_rank, u, dim)
    if r.min_rank > 1:
        assert not triple_noncommutative_check(r.min_rank - 1, u, dim)


@pytest.mark.parametrize("n", range(9, 100, 2))
def test_triple_noncommutative_large_multiplicity(n):
    g = n * comb(n, (n - 1) // 2)
    assert triple_noncommutative_check(n, n, 2 * g)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_triple_noncommutative_fails_for_small_family_members(n):
    g = n * comb(n, (n - 1) // 2)
    assert not triple_noncommutative_check(n, n, 2 * g)


def test_general_examples():
    r = general_rank_bound(1)
    assert (r.min_rank, r.witness_lhs, r.witness_rhs) == (2, 12, 4)
    # g1(7) = 30 gives 2**7 * 30 = 3840 < 4000; g1(8) = 30 gives 7680
    assert brute_g1(7) == 30 and brute_g1(8) == 30
    r = general_rank_bound(1000)
    assert (r.min_rank, r.witness_lhs, r.witness_rhs) == (8, 7680, 4000)
    for n in range(1, 25):
        g = 2 ** (n - 1)
        assert general_rank_bound(g).min_rank <= n + 1


def test_general_equality_case():
    # 2**5 * g1(5) = 384 = 4 * 96
    r = general_rank_bound(96)
    assert r.min_rank == 5 and r.equality
    assert not general_rank_bound(97).equality


def test_general_overflow():
    with pytest.raises(OverflowError):
        general_rank_bound(10**200)


@given(st.integers(1, 10**12))
def test_general_never_stronger(g):
    assert general_rank_bound(g).min_rank <= commutative_rank_bound(g).min_rank


@given(st.integers(1, 10**9))
def test_general_is_minimal(g):
    n = general_rank_bound(g).min_rank
    assert 2**n * landau_g1(n) >= 4 * g
    if n > 2:
        assert 2 ** (n - 1) * landau_g1(n - 1) < 4 * g


def test_product_bound():
    assert product_rank_bound([1]) == general_rank_bound(1)
    assert product_rank_bound([2, 3]) == general_rank_bound(5)
    assert product_rank_bound([4, 4, 4]) == general_rank_bound(12)
    with pytest.raises(ValueError):
        product_rank_bound([])
    with pytest.raises(ValueError):
        product_rank_bound([3, 0])


def test_hodge_split():
    for g in (1, 2, 7):
        s = hodge_split(g, g)
        assert s.values == (H, -H) and s.r == H
    s = hodge_split(1, 0)
    assert s.r == 0 and s.values == (1, 0)
    s = hodge_split(3, 1)
    assert s.r == Q(1, 4) and s.values == (Q(3, 4), Q(-1, 4))
    with pytest.raises(ValueError):
        hodge_split(0, 0)


@given(st.integers(0, 1000), st.integers(0, 1000))
def test_hodge_split_values_differ_by_one(g0, g1):
    if g0 + g1 == 0:
        return
    s = hodge_split(g0, g1)
    assert s.values[0] - s.values[1] == 1
    # weight 1 characters pair to 1 with mu = mu_H + r mu0
    assert s.values[0] + s.r == 1 and s.values[1] + s.r == 0


def test_division_field_exponent():
    e = division_field_exponent(1, 1)
    assert e.value == 2.0 and e.exact == 2
    e = division_field_exponent(4, 1)
    assert e.value == 4.0 and e.exact == 4
    e = division_field_exponent(3, 2)
    assert e.exact is None
    assert e.value == pytest.approx(2 * (math.log2(3) + 2))
    assert e.value == pytest.approx(7.1699, abs=1e-4)
    assert division_field_exponent(2**100, 3).exact == 306
