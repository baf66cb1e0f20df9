"""
Minuscule weights and Weyl orbits
=================================

In a minuscule representation the torus characters form one Weyl orbit,
each with multiplicity one.  Counting the orbit counts the characters.
"""

from mtrank import SimpleType, char_count_bound, minuscule_catalog, weyl_orbit

for label in ("A3", "B4", "C3", "D5", "E6", "E7"):
    t = SimpleType.parse(label)
    for rep in minuscule_catalog(t):
        orbit = weyl_orbit(t, rep.highest_weight)
        print(f"{label} w{rep.fundamental_weight_index}: dim {rep.dimension:3d}, "
              f"orbit {len(orbit):3d}, bound 2^(rk) = {char_count_bound(t.rank + 1)}")

# The spin orbit of B3 is every sign pattern of (1/2, 1/2, 1/2).
print()
b3 = SimpleType.parse("B3")
for w in weyl_orbit(b3, minuscule_catalog(b3)[0].highest_weight):
    print("   ", tuple(str(x) for x in w))
