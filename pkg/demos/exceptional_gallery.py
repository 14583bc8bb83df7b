#!/usr/bin/env python3
"""Gallery of exceptional sets: concentric regular gons, symmetry, plane counts.

A set with a nontrivial group of linear self-maps is a union of s concentric
regular r-gons, possibly together with the shared barycenter.  We build a few,
take them apart again, and tabulate the characteristic plane count
chi = n!/|G|.

Run with:  python3 demos/exceptional_gallery.py
"""
import math
from fractions import Fraction

from polyred import (
    chi,
    decompose,
    generate_exceptional,
    make_field,
    stabilizer,
)

F = make_field(12)

# zeta exponents giving a primitive r-th root of unity inside Q(zeta_12)
EXP = {2: 6, 3: 4, 4: 3, 6: 2}


def gon_union(r, s, include_barycenter, bary=Fraction(1, 2)):
    # aligned gons with radii 1, 2, ..., s around a rational barycenter;
    # distinct radii pin the stabilizer order to exactly r
    b = F.from_rational(bary)
    seeds = [b + F.from_rational(k + 1) for k in range(s)]
    second = b + F.from_rational(1) * F.zeta(EXP[r])
    return generate_exceptional(F, r, s, EXP[r], seeds, second,
                                include_barycenter=include_barycenter)


print("r  s  +bary   n   |G|   chi = n!/|G|")
print("-" * 40)
for r, s, inc in [(2, 1, True), (2, 2, False), (2, 3, True),
                  (3, 1, False), (3, 1, True), (3, 2, False),
                  (4, 1, False), (4, 1, True), (6, 1, False)]:
    B = gon_union(r, s, inc)
    n = len(B)
    g = stabilizer(B).order
    print(f"{r}  {s}  {str(inc):<5} {n:>3} {g:>5}   {chi(B):>6}"
          f"   (n! = {math.factorial(n)})")

print()

# Decompose one of them and print the recovered geometry.
B = gon_union(3, 2, True)
st = decompose(B)
print("decomposing two triangles plus barycenter:")
print("  r =", st.r, " s =", st.s, " group order =", st.group_order)
print("  barycenter =", st.barycenter,
      "(member of the set)" if st.includes_barycenter else "")
for i, gon in enumerate(st.gons):
    print(f"  gon {i}: " + ", ".join(str(v) for v in gon))
print(f"  generator  X -> ({st.generator.slope})*X + ({st.generator.intercept})")

# Round trip: rebuilding from the decomposition reproduces the set exactly.
tau_exp = next(k for k in range(12) if F.zeta(k) == st.generator.slope)
again = generate_exceptional(F, st.r, st.s, tau_exp,
                             [g[0] for g in st.gons], st.gons[0][1],
                             include_barycenter=st.includes_barycenter)
print("round trip reproduces the set:", again == B)
