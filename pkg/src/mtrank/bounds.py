"""Rank lower bounds for Mumford-Tate and l-adic monodromy groups.

Every inequality is decided in cleared-denominator integer form, e.g.
rk >= log2 g + 2 becomes 2**(rk - 2) >= g, so equality cases at powers of two
are exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .landau import landau_table

GENERAL_SEARCH_CAP = 256


class BoundKind(str, Enum):
    COMMUTATIVE = "commutative"
    GENERAL = "general"
    TRIPLE_COMMUTATIVE = "triple_commutative"
    TRIPLE_NONCOMMUTATIVE = "triple_noncommutative"


@dataclass(frozen=True)
class BoundReport:
    """Minimal rank allowed for a given dimension.

    witness_lhs >= witness_rhs is the integer form of the bound at min_rank;
    equality means the bound is met exactly there.
    """

    input_dimension: int
    bound_kind: BoundKind
    min_rank: int
    witness_lhs: int
    witness_rhs: int
    equality: bool


def _positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")


def char_count_bound(rank: int) -> int:
    """Maximum number of distinct torus characters: 2**(rank - 1)."""
    _positive("rank", rank)
    return 1 << (rank - 1)


def dim_bound(rank: int, max_multiplicity: int) -> int:
    """dim rho <= M * 2**(rank - 1)."""
    _positive("max_multiplicity", max_multiplicity)
    return max_multiplicity * char_count_bound(rank)


def count_distinct_characters(weights: Iterable[Sequence]) -> int:
    return len({tuple(Fraction(x) for x in w) for w in weights})


def commutative_rank_bound(g: int) -> BoundReport:
    """Smallest n with 2**(n - 2) >= g, i.e. n >= log2 g + 2."""
    _positive("g", g)
    n = max(2, (g - 1).bit_length() + 2)
    lhs = 1 << (n - 2)
    return BoundReport(g, BoundKind.COMMUTATIVE, n, lhs, g, lhs == g)


def triple_commutative_check(rank: int, dim: int) -> bool:
    """rank >= log2 dim + 1, as 2**(rank - 1) >= dim."""
    _positive("rank", rank)
    _positive("dim", dim)
    return char_count_bound(rank) >= dim


def triple_noncommutative_check(rank: int, u: int, dim: int) -> bool:
    """rank + log2 u >= log2 dim + 1, as u * 2**(rank - 1) >= dim."""
    _positive("rank", rank)
    _positive("u", u)
    _positive("dim", dim)
    return u * char_count_bound(rank) >= dim


def triple_rank_bound(dim: int, u: int = 1) -> BoundReport:
    """Smallest rank with u * 2**(rank - 1) >= dim."""
    _positive("dim", dim)
    _positive("u", u)
    need = -(-dim // u)  # ceil(dim / u)
    rank = max(1, (need - 1).bit_length() + 1)
    lhs = u * char_count_bound(rank)
    kind = BoundKind.TRIPLE_COMMUTATIVE if u == 1 else BoundKind.TRIPLE_NONCOMMUTATIVE
    return BoundReport(dim, kind, rank, lhs, dim, lhs == dim)


def general_rank_bound(g: int) -> BoundReport:
    """Smallest n >= 2 with n + log2 g1(n) >= log2 g + 2, i.e. 2**n * g1(n) >= 4g.

    Note alpha(n) * sqrt(n ln n) = log2 g1(n), so this is the
    noncommutative bound with the exact g1 in place of alpha.
    """
    _positive("g", g)
    rhs = 4 * g
    table = landau_table(GENERAL_SEARCH_CAP)
    for n in range(2, GENERAL_SEARCH_CAP + 1):
        lhs = (1 << n) * table.g1(n)
        if lhs >= rhs:
            return BoundReport(g, BoundKind.GENERAL, n, lhs, rhs, lhs == rhs)
    raise OverflowError(f"no rank <= {GENERAL_SEARCH_CAP} satisfies the bound for g = {g}")


def product_rank_bound(dims: Sequence[int]) -> BoundReport:
    """General bound for a product of pairwise non-isogenous simple factors.

    Multiplicities do not change the Mumford-Tate group, so dims holds one
    dimension per isogeny class and the bound applies to their sum.
    """
    if not dims:
        raise ValueError("dims must be nonempty")
    for d in dims:
        _positive("dimension", d)
    return general_rank_bound(sum(dims))


@dataclass(frozen=True)
class HodgeSplit:
    g0: int
    g1: int
    r: Fraction
    values: tuple[Fraction, Fraction]


def hodge_split(g0: int, g1: int) -> HodgeSplit:
    """Pairings <omega, mu_H> allowed when weights 0 and 1 occur g0 and g1 times."""
    if g0 < 0 or g1 < 0:
        raise ValueError("multiplicities must be nonnegative")
    if g0 + g1 == 0:
        raise ValueError("g0 + g1 must be positive")
    total = g0 + g1
    return HodgeSplit(g0, g1, Fraction(g1, total), (Fraction(g0, total), Fraction(-g1, total)))


@dataclass(frozen=True)
class DivisionFieldExponent:
    value: float
    exact: Fraction | None  # set when g is a power of two


def division_field_exponent(g: int, n: int) -> DivisionFieldExponent:
    """Exponent n * (log2 g + 2) in the growth of [K(A[l^n]) : K].

    The multiplicative constant C(A, K, l) is not modelled.
    """
    _positive("g", g)
    _positive("n", n)
    exact = None
    if g & (g - 1) == 0:
        exact = Fraction(n * (g.bit_length() - 1 + 2))
        return DivisionFieldExponent(float(exact), exact)
    return DivisionFieldExponent(n * (math.log2(g) + 2), exact)
