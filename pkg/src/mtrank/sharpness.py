"""Arithmetic of the families showing the rank bounds are sharp.

The number-theoretic inputs (fields, division algebras, polarizations) are
taken as given; only dimensions, ranks, orbits and lattice invariants are
computed here.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, prod

from .bounds import (
    char_count_bound,
    commutative_rank_bound,
    count_distinct_characters,
    general_rank_bound,
    triple_noncommutative_check,
)
from .lattice import quotient_exponent
from .rootsys import SimpleType, fundamental_weight, gl_lattice_relations, weyl_orbit

# B_n spin orbits have 2**n elements; past this rank they are not enumerated.
SPIN_ORBIT_MAX_RANK = 14


class ExampleId(str, Enum):
    CM = "cm"
    SPIN = "spin"
    SL2_PRODUCT = "sl2_product"
    LARGE_MULTIPLICITY = "large_multiplicity"


@dataclass
class ExampleReport:
    example_id: ExampleId
    n: int
    abelian_dim: int
    mt_rank: int
    bound_value_equalled: bool
    notes: dict[str, object] = field(default_factory=dict)


def _report(example_id: ExampleId, n: int, dim: int, rank: int, notes: dict) -> ExampleReport:
    bound = commutative_rank_bound(dim)
    notes.setdefault("commutative_min_rank", bound.min_rank)
    equalled = bound.min_rank == rank and bound.equality
    return ExampleReport(example_id, n, dim, rank, equalled, notes)


def cm_example(n: int) -> ExampleReport:
    """CM abelian variety whose reflex field has degree 2**(n-1)."""
    if n < 2:
        raise ValueError(f"cm example needs n >= 2, got {n}")
    dim = 1 << (n - 1)
    rank = n + 1
    notes = {"reflex_degree": dim, "torus_rank_cap": n + 1, "rank_within_cap": rank <= n + 1}
    return _report(ExampleId.CM, n, dim, rank, notes)


def spin_example(n: int, orbit_max_rank: int = SPIN_ORBIT_MAX_RANK) -> ExampleReport:
    """GSpin group of a form of signature (2, 2n-1), with root system B_n.

    n must be 1 or 2 mod 4.  For n = 1 the root system B1 is reported as A1.
    """
    if n < 1 or n % 4 not in (1, 2):
        raise ValueError(f"spin example needs n congruent to 1 or 2 mod 4, got {n}")
    root_type = SimpleType("A", 1) if n == 1 else SimpleType("B", n)
    spin_dim = 1 << n
    notes: dict[str, object] = {
        "root_system": str(root_type) + (" (B1 alias)" if n == 1 else ""),
        "quadratic_form_signature": (2, 2 * n - 1),
        "spin_dimension": spin_dim,
    }
    if n <= orbit_max_rank:
        orbit = weyl_orbit(root_type, fundamental_weight(root_type, root_type.rank))
        count = count_distinct_characters(orbit)
        notes["orbit_size"] = len(orbit)
        notes["orbit_matches_spin_dimension"] = len(orbit) == spin_dim
        notes["character_count"] = count
    else:
        notes["orbit_size"] = None
    notes["char_count_bound"] = char_count_bound(n + 1)
    if notes.get("character_count") is not None:
        notes["char_count_attained"] = notes["character_count"] == char_count_bound(n + 1)
    return _report(ExampleId.SPIN, n, spin_dim // 2, n + 1, notes)


def sl2_product_example(n: int, orbit_max_rank: int = SPIN_ORBIT_MAX_RANK) -> ExampleReport:
    """Quaternion-algebra family; over C the group is G_m x SL_2^n modulo signs."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"sl2 product example needs odd n, got {n}")
    factors = [1] + [2] * n
    rep_dim = prod(factors)
    notes: dict[str, object] = {
        "tensor_factors": factors,
        "rep_dimension": rep_dim,
        "tensor_factorization_ok": rep_dim == 1 << n,
    }
    if n <= orbit_max_rank:
        # torus characters of the tensor product: one orbit per SL_2 factor,
        # with the central coordinate fixed at 1
        a1 = SimpleType("A", 1)
        std = weyl_orbit(a1, fundamental_weight(a1, 1))
        chars = [
            (Fraction(1),) + tuple(x for w in combo for x in w)
            for combo in itertools.product(std, repeat=n)
        ]
        notes["character_count"] = count_distinct_characters(chars)
        notes["char_count_attained"] = notes["character_count"] == char_count_bound(n + 1)
    if n == 3:
        notes["mumford_anchor"] = {"group": "G_m x SL_2^3", "abelian_dim": 4, "rank": 4}
    return _report(ExampleId.SL2_PRODUCT, n, rep_dim // 2, n + 1, notes)


def multiplicity_deviation(n: int) -> float:
    """log2(n * C(n, r)) - n - log2(n) / 2 with r = (n - 1) / 2."""
    g = n * comb(n, (n - 1) // 2)
    return math.log2(g) - n - 0.5 * math.log2(n)


def large_multiplicity_example(n: int) -> ExampleReport:
    """Simple abelian variety of dimension n * C(n, r) with group a form of GL_n.

    The representation splits over C into copies of the r-th exterior power
    with multiplicity n, and u of the GL_n lattice model is n.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"large multiplicity example needs odd n >= 3, got {n}")
    r = (n - 1) // 2
    g = n * comb(n, r)
    u = quotient_exponent(n, gl_lattice_relations(n))
    multiplicity = n
    general = general_rank_bound(g)
    notes: dict[str, object] = {
        "r": r,
        "rep_dimension": 2 * g,
        "u_gl_model": u,
        "multiplicity": multiplicity,
        "multiplicity_divides_u": u % multiplicity == 0,
        "triple_check": triple_noncommutative_check(n, u, 2 * g),
        "triple_check_with_central_torus": triple_noncommutative_check(n + 1, u, 2 * g),
        "general_min_rank": general.min_rank,
        "general_bound_satisfied": general.min_rank <= n,
        "delta": multiplicity_deviation(n),
    }
    return _report(ExampleId.LARGE_MULTIPLICITY, n, g, n, notes)
