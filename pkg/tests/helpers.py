"""Shared samplers and independent oracles for the test suite.

The oracles here deliberately avoid the library's search strategies: the
reduction oracle enumerates raw value assignments and interpolates with
sympy over Q, and the successor oracle enumerates set partitions with
multiplicity vectors.  Agreement between these and the package routines is
what the dual-route tests assert.
"""
from fractions import Fraction
from itertools import combinations

from polyred import FiniteSubset, Poly
from polyred.reduction import compositions


def rand_fraction(rng, span=12, den=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_rational_set(field, rng, n, span=12, den=6):
    vals = set()
    while len(vals) < n:
        vals.add(rand_fraction(rng, span, den))
    return FiniteSubset(field, vals)


def rand_element(field, rng, span=6):
    """Random element with small integer coordinates, nonzero if possible."""
    coords = [Fraction(rng.randint(-span, span)) for _ in range(field.degree)]
    return field.element(coords)


def rand_linear_map(field, rng):
    from polyred import LinearMap
    slope = field.zero()
    while slope.is_zero():
        slope = field.from_rational(rand_fraction(rng, 8, 4))
    return LinearMap(slope, field.from_rational(rand_fraction(rng, 8, 4)))


def set_partitions(items, k):
    """All partitions of items into exactly k nonempty blocks."""
    items = list(items)
    if k == 1:
        yield [list(items)]
        return
    if len(items) == k:
        yield [[x] for x in items]
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest, k - 1):
        yield [[first]] + part
    for part in set_partitions(rest, k):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def successor_oracle(A):
    """Classes reachable from A, by exhaustive fiber-partition search.

    For every admissible (n, gamma), every partition of A into n blocks of
    size <= gamma and every positive multiplicity vector summing to gamma per
    block, the monic fiber products M_i must differ from M_1 by constants
    w_i; when they do (and the w_i are distinct), the reached class is the
    class of {w_i}.  Returns the set of canonical invariant keys, excluding
    the trivial [A] and singleton entries.
    """
    from polyred import canonical_invariant
    from polyred.reduction import degree_bounds

    field = A.field
    m = len(A)
    keys = set()
    for n in range(2, m):
        window = degree_bounds(m, n).gammas
        for gamma in window:
            for blocks in set_partitions(A.elems, n):
                if any(len(b) > gamma for b in blocks):
                    continue
                mult_choices = [list(compositions(gamma, len(b))) for b in blocks]

                def rec(i, monics):
                    if i == len(blocks):
                        w = []
                        base = monics[0]
                        ok = True
                        for M in monics:
                            D = base - M
                            if D.degree > 0:
                                ok = False
                                break
                            w.append(D.coeffs[0] if not D.is_zero()
                                     else field.zero())
                        if ok and len(set(w)) == len(w):
                            keys.add(canonical_invariant(
                                FiniteSubset(field, w)).key())
                        return
                    for mults in mult_choices[i]:
                        M = Poly.from_roots(field, zip(blocks[i], mults))
                        rec(i + 1, monics + [M])

                rec(0, [])
    return keys


def reduction_oracle_q(A_vals, B_vals):
    """All reducing polynomials from A onto B over Q, degrees 1..m-1.

    Independent of the package: raw value assignments, Lagrange interpolation
    and derivatives done directly with Fractions.  Returns a set of
    coefficient tuples (ascending).  Searches every degree, not just the
    admissible window, so it can certify window emptiness.
    """
    from itertools import product

    A_vals = sorted(Fraction(a) for a in A_vals)
    B_vals = sorted(Fraction(b) for b in B_vals)
    m = len(A_vals)

    def interp(pts):
        # Newton form built with Fractions, expanded to ascending coefficients
        xs = [p[0] for p in pts]
        dd = [p[1] for p in pts]
        for lvl in range(1, len(pts)):
            for i in range(len(pts) - 1, lvl - 1, -1):
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl])
        coeffs = [dd[-1]]
        for t in range(len(pts) - 2, -1, -1):
            coeffs = [Fraction(0)] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= xs[t] * coeffs[i + 1]
            coeffs[0] += dd[t]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs

    def ev(coeffs, a):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * a + c
        return acc

    def deriv(coeffs):
        return [k * c for k, c in enumerate(coeffs)][1:]

    found = set()
    for assign in product(range(len(B_vals)), repeat=m):
        if len(set(assign)) != len(B_vals):
            continue  # not onto
        pts = [(a, B_vals[idx]) for a, idx in zip(A_vals, assign)]
        coeffs = interp(pts)
        gamma = len(coeffs) - 1
        if gamma < 1:
            continue
        counts = {}
        for idx in assign:
            counts[idx] = counts.get(idx, 0) + 1
        if any(c > gamma for c in counts.values()):
            continue
        good = True
        for bidx in set(assign):
            fiber = [a for a, j in zip(A_vals, assign) if j == bidx]
            shifted = coeffs[:]
            shifted[0] -= B_vals[bidx]
            total = 0
            for a in fiber:
                e = 0
                D = shifted
                while ev(D, a) == 0:
                    e += 1
                    D = deriv(D)
                total += e
            if total != gamma:
                good = False
                break
        if good:
            found.add(tuple(coeffs))
    return found
