#!/usr/bin/env python3
"""Tour of the 3-element landscape over Q(zeta_12).

Every 2-element set is linearly equivalent to {0,1}, so cardinality 3 is the
first place where classes separate.  This script walks the classical
examples: the arithmetic progression class (which {0,1,1/2} and {0,1,-1}
also inhabit), the equilateral class of the cube roots of unity, and a
generic class with trivial symmetry, printing the invariants that tell them
apart.

Run with:  python3 demos/three_set_landscape.py
"""
from fractions import Fraction

from polyred import (
    FiniteSubset,
    canonical_invariant,
    chi,
    equivalent,
    is_exceptional,
    linear_maps_between,
    make_field,
    roots_of_unity,
    sigma3_coordinate,
    stabilizer,
)

F = make_field(12)


def rset(vals):
    return FiniteSubset(F, [F.from_rational(Fraction(v)) for v in vals])


samples = {
    "{0, 1, 2}": rset([0, 1, 2]),
    "{0, 1, 1/2}": rset([0, 1, Fraction(1, 2)]),
    "{0, 1, -1}": rset([0, 1, -1]),
    "mu_3": roots_of_unity(F, 3),
    "{0, 1, zeta_6}": FiniteSubset(F, [F.zero(), F.one(), F.zeta(2)]),
    "{0, 1, 3}": rset([0, 1, 3]),
}

print("set                 invariant        |G|  chi  exceptional  sigma3")
print("-" * 78)
for name, B in samples.items():
    inv = canonical_invariant(B)
    lam = ", ".join(str(x) for x in inv.lambdas)
    st = stabilizer(B)
    u, v = sigma3_coordinate(B)
    print(f"{name:<19} ({lam:<14}) {st.order:>3} {chi(B):>4}"
          f"  {str(is_exceptional(B)):<11}  ({u} : {v})")

print()

# The first three rows share one class: exhibit witnesses for a pair of them.
A, B = samples["{0, 1, 2}"], samples["{0, 1, 1/2}"]
print("{0,1,2} ~ {0,1,1/2}:", equivalent(A, B))
for f in linear_maps_between(A, B):
    print(f"  witness  X -> ({f.slope})*X + ({f.intercept})")

# The equilateral class meets its mirror: zeta_6 and zeta_6^5 give one class.
tri = samples["{0, 1, zeta_6}"]
mirror = FiniteSubset(F, [F.zero(), F.one(), F.zeta(2) ** 5])
print("{0,1,zeta_6} ~ {0,1,zeta_6^5}:", equivalent(tri, mirror))

# A quick census: how many distinct classes did the table above contain?
keys = {canonical_invariant(B).key() for B in samples.values()}
print(f"\n{len(samples)} sets, {len(keys)} distinct classes")
