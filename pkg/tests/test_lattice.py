import random

import pytest
from hypothesis import given, strategies as st

from mtrank.lattice import (
    InfiniteQuotientError,
    IntMatrix,
    QuotientInvariants,
    quotient_exponent,
    smith_diagonal,
    smith_normal_form,
)
from mtrank.rootsys import SimpleType, cartan_matrix, gl_lattice_relations

from oracles import bareiss_det, determinantal_divisors

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


def test_examples():
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 2]])) == QuotientInvariants((2, 2), 0)
    assert smith_normal_form(IntMatrix.identity(3)) == QuotientInvariants((), 0)
    assert smith_normal_form(IntMatrix.from_rows([[1, 2], [3, 4]])) == QuotientInvariants((2,), 0)


def test_free_rank_counts_missing_directions():
    inv = smith_normal_form(IntMatrix.from_rows([[2, 4, 6]]))
    assert inv == QuotientInvariants((2,), 2)
    assert not inv.is_finite
    with pytest.raises(InfiniteQuotientError):
        inv.order


def test_zero_matrix():
    assert smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]])) == QuotientInvariants((), 2)


@given(matrices)
def test_matches_determinantal_divisors(rows):
    inv = smith_normal_form(IntMatrix.from_rows(rows))
    divisors, free = determinantal_divisors(rows)
    assert list(inv.elementary_divisors) == divisors
    assert inv.free_rank == free


@given(matrices)
def test_divisibility_chain(rows):
    d = smith_normal_form(IntMatrix.from_rows(rows)).elementary_divisors
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert all(x > 1 for x in d)


def _random_unimodular(n, rng):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            m[0] = [-x for x in m[0]]
            continue
        k = rng.randint(-3, 3)
        m[i] = [a + k * b for a, b in zip(m[i], m[j])]
    return m


def _mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


@given(matrices, st.integers(0, 2**32))
def test_invariant_under_unimodular_change(rows, seed):
    rng = random.Random(seed)
    left = _random_unimodular(len(rows), rng)
    right = _random_unimodular(len(rows[0]), rng)
    moved = _mul(_mul(left, rows), right)
    assert smith_normal_form(IntMatrix.from_rows(moved)) == smith_normal_form(IntMatrix.from_rows(rows))


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-7, 7), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_diagonal_product_is_abs_det(rows):
    det = bareiss_det(rows)
    diag = smith_diagonal(IntMatrix.from_rows(rows))
    if det == 0:
        assert len(diag) < len(rows)
    else:
        prod = 1
        for d in diag:
            prod *= d
        assert prod == abs(det)


def test_quotient_exponent_examples():
    assert quotient_exponent(2, IntMatrix.from_rows([[2, 0], [0, 2]])) == 2
    assert quotient_exponent(2, IntMatrix.from_rows([[2, -1], [-1, 2]])) == 3
    assert quotient_exponent(3, IntMatrix.identity(3)) == 1


@pytest.mark.parametrize("n", range(1, 14))
def test_gl_model_quotient_is_cyclic_of_order_n(n):
    inv = smith_normal_form(gl_lattice_relations(n))
    assert inv.elementary_divisors == ((n,) if n > 1 else ())
    assert quotient_exponent(n, gl_lattice_relations(n)) == n


@pytest.mark.parametrize("n", range(2, 14))
def test_sl_n_cartan_exponent(n):
    assert quotient_exponent(n - 1, cartan_matrix(SimpleType("A", n - 1))) == n


def test_quotient_exponent_errors():
    with pytest.raises(InfiniteQuotientError, match="infinite quotient"):
        quotient_exponent(2, IntMatrix.from_rows([[1, 1]]))
    with pytest.raises(ValueError):
        quotient_exponent(3, IntMatrix.identity(2))


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix.from_rows([[1.5]])
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m[1, 0] == 3 and m.to_rows() == [[1, 2], [3, 4]]
