"""
Landau's function and the alpha(n) correction term
===================================================

g(n) is the largest order of a permutation of n points; g1(n) shifts the
cost of each cycle length down by one.  alpha(n) = log2 g1(n) / sqrt(n ln n)
is the correction term in the rank bound for abelian varieties whose
endomorphism algebra is not commutative.
"""

from mtrank import alpha, alpha_envelope, landau_g, landau_g1

# Small values: both functions are exact Python ints.
for n in range(0, 13):
    print(f"n={n:2d}  g={landau_g(n):4d}  g1={landau_g1(n):4d}")

# alpha stays below 2.  From n = 9 onward the Massias-based envelope already
# certifies this; below 9 we just look.
print()
for n in (2, 3, 4, 8, 9, 50, 500, 5000):
    a = alpha(n)
    note = f"envelope {alpha_envelope(n):.4f}" if n >= 9 else "(checked directly)"
    print(f"alpha({n}) = {a.alpha:.6f}   {note}")

# The values creep toward 1/ln 2 = 1.4427 very slowly.
print()
print("g1(5000) has", len(str(landau_g1(5000))), "decimal digits")
