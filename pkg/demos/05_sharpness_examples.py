"""
Families where the bounds are sharp
===================================

CM, spin and SL2-product abelian varieties of dimension 2^(n-1) have
Mumford-Tate rank exactly n + 1.  A family with multiplicity n shows the
noncommutative bound cannot be improved to n >= log2 g + O(1).
"""

from mtrank.sharpness import (
    cm_example,
    large_multiplicity_example,
    sl2_product_example,
    spin_example,
)

for report in (cm_example(5), spin_example(5), sl2_product_example(5)):
    print(f"{report.example_id.value:12s} n={report.n}  dim A={report.abelian_dim}  "
          f"rank={report.mt_rank}  bound met={report.bound_value_equalled}")

print()
print("spin(5) notes:", spin_example(5).notes)

# log2 g - n - (1/2) log2 n settles near -0.3257.
print()
for n in (3, 5, 9, 21, 51, 99):
    r = large_multiplicity_example(n)
    print(f"n={n:3d}  g={r.abelian_dim}  delta={r.notes['delta']:+.4f}  "
          f"u={r.notes['u_gl_model']}  general min rank={r.notes['general_min_rank']}")
