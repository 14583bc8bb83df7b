#!/usr/bin/env python3
"""Reductions across cardinalities: windows, witnesses, successors, predecessors.

A polynomial P reduces A to B when A is exactly the preimage P^{-1}(B).  The
admissible degrees are pinched into the window [m/n, (m-1)/(n-1)], which is
often empty; when it is not, an exhaustive search returns every witness with
its verified fiber structure.

Run with:  python3 demos/reduction_tour.py
"""
from fractions import Fraction

from polyred import (
    FiniteSubset,
    degree_bounds,
    find_reductions,
    make_field,
    predecessor_2n_minus_1,
    roots_of_unity,
    successors,
)

F = make_field(12)


def rset(vals):
    return FiniteSubset(F, [F.from_rational(Fraction(v)) for v in vals])


# -- degree windows ------------------------------------------------------------

print("degree windows [m/n, (m-1)/(n-1)]:")
for m, n in [(5, 3), (7, 3), (6, 2), (4, 3), (6, 5)]:
    w = degree_bounds(m, n)
    print(f"  m={m} n={n}: {list(w.gammas) or 'empty'}")
print()

# -- a classical witness ---------------------------------------------------------

A = rset([0, 1, -1, 2, -2])
B = rset([0, 1, 4])
print(f"reductions {A} -> {B}:")
for red in find_reductions(A, B):
    print(f"  degree {red.gamma}:", red.poly)
    for b, pre in red.fibers:
        parts = ", ".join(f"{a} (mult {e})" for a, e in pre)
        print(f"    fiber over {b}: {parts}")
print()

# An empty window means no witness exists, whatever the sets look like.
print("window (4,3) empty, search over {0,1,3,7} -> {0,1,5}:",
      find_reductions(rset([0, 1, 3, 7]), rset([0, 1, 5])))
print()

# -- everything reachable from one set ------------------------------------------

A = FiniteSubset(F, [F.zero()] + list(roots_of_unity(F, 3)))
print(f"successor classes of {A}:")
for sc in successors(A):
    if sc.trivial:
        print(f"  n={sc.invariant.n}: trivial (the class itself or a point)")
    else:
        print(f"  n={sc.invariant.n}: witness {sc.witness.poly} "
              f"onto {sc.witness.target}")
print()

# -- climbing the other way ------------------------------------------------------

B = rset([0, 1, 4])
A = predecessor_2n_minus_1(B)
print(f"quadratic predecessor of {B}: {A}")
card3 = [sc for sc in successors(A) if sc.invariant.n == 3]
print("its unique 3-element successor class has invariant",
      tuple(str(x) for x in card3[0].invariant.lambdas))
