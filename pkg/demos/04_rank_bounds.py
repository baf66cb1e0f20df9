"""
Rank bounds for abelian varieties
=================================

Commutative End A: rk G >= log2 g + 2.  Pairwise non-isogenous simple
factors: n + log2 g1(n) >= log2 g + 2.  Both are decided in integers.
"""

from mtrank import (
    commutative_rank_bound,
    division_field_exponent,
    general_rank_bound,
    hodge_split,
    product_rank_bound,
)

print("   g  commutative  general")
for g in (1, 2, 3, 4, 5, 16, 17, 100, 1000, 10**6):
    c, n = commutative_rank_bound(g), general_rank_bound(g)
    mark = "  (equality)" if c.equality else ""
    print(f"{g:>7}  {c.min_rank:>11}  {n.min_rank:>7}{mark}")

# Multiplicities of isogeny factors do not matter; one dimension per class.
print()
print("A1^3 x A2 with dims 2, 3:", product_rank_bound([2, 3]).min_rank)

# Pairings of characters against the Hodge part of the cocharacter.
print()
for g0, g1 in ((4, 4), (3, 1)):
    s = hodge_split(g0, g1)
    print(f"g0={g0}, g1={g1}: r = {s.r}, pairings {s.values[0]} or {s.values[1]}")

print()
e = division_field_exponent(8, 3)
print("growth exponent of [K(A[l^3]) : K] for g = 8:", e.exact)
