"""
Fundamental groups from Cartan matrices
=======================================

The weight lattice modulo the root lattice is read off from the Smith normal
form of the Cartan matrix.  Its exponent e never exceeds rank + 1, with
equality only in type A, which is what ties u(G) to g1(rk G).
"""

from mtrank import SimpleType, cartan_matrix, fundamental_group_invariants, verify_u_vs_g1

for label in ("A1", "A4", "B3", "C4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"):
    t = SimpleType.parse(label)
    inv = fundamental_group_invariants(t)
    print(f"{label:3s} divisors={inv.elementary_divisors!s:8s} exponent={inv.exponent}")

print()
print("Cartan matrix of B3:")
for row in cartan_matrix(SimpleType.parse("B3")).to_rows():
    print("   ", row)

# Every semisimple shape of rank <= 10, exhaustively.
report = verify_u_vs_g1(10)
print()
print(f"{report.shapes_checked} shapes checked, {len(report.violations)} violations")
for rank, (u, shape) in report.best_per_rank.items():
    print(f"  rank {rank:2d}: largest lcm of exponents {u:3d}  via {shape}")
