"""Enriched Vandermonde matrices and exact rank.

An instance stacks, for each node a_l, the power row (1, a, ..., a^gamma)
followed by its first s_l formal derivatives in a.  Entries come from the
falling-factorial rule d^s/da^s a^(j-1) = (j-1)(j-2)...(j-s) a^(j-1-s), so no
symbolic differentiation is involved.  With R = sum(s_l + 1) <= gamma + 1 the
rank is always R; a kernel vector of the matrix is exactly a polynomial of
degree <= gamma having each a_l as a root of multiplicity >= s_l + 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .field import CyclotomicField, FieldElement
from .poly import _coerce, solve_linear


@dataclass(frozen=True)
class EnrichedVandermonde:
    """R x (gamma+1) matrix of derivative rows at the nodes a_vec."""

    gamma_plus_1: int
    s_vec: tuple[int, ...]
    a_vec: tuple[FieldElement, ...]
    rows: tuple[tuple[FieldElement, ...], ...]

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def to_json_obj(self) -> dict:
        return {
            "gamma_plus_1": self.gamma_plus_1,
            "s_vec": list(self.s_vec),
            "a_vec": [a.encode() for a in self.a_vec],
            "rows": [[e.encode() for e in row] for row in self.rows],
        }


def build_enriched(gamma_plus_1: int, s_vec, a_vec) -> EnrichedVandermonde:
    """Power rows plus s_l derivative rows per node; requires R <= gamma+1."""
    if gamma_plus_1 < 1:
        raise ValueError("need at least one column")
    svec = tuple(int(s) for s in s_vec)
    if any(s < 0 for s in svec):
        raise ValueError("derivative counts must be nonnegative")
    if len(svec) != len(a_vec):
        raise ValueError("s_vec and a_vec must have equal length")
    if not a_vec:
        raise ValueError("need at least one node")
    field = a_vec[0].field if isinstance(a_vec[0], FieldElement) else None
    if field is None:
        raise ValueError("nodes must be field elements")
    nodes = tuple(_coerce(field, a) for a in a_vec)
    if len(set(nodes)) != len(nodes):
        raise ValueError("nodes must be pairwise distinct")
    R = sum(svec) + len(svec)
    if R > gamma_plus_1:
        raise ValueError(f"row overflow: R = {R} exceeds {gamma_plus_1} columns")
    rows = []
    for s_l, a in zip(svec, nodes):
        powers = [field.one()]
        for _ in range(gamma_plus_1 - 1):
            powers.append(powers[-1] * a)
        for s in range(s_l + 1):
            row = []
            for j in range(1, gamma_plus_1 + 1):
                fall = math.perm(j - 1, s)
                row.append(fall * powers[j - 1 - s] if fall else field.zero())
            rows.append(tuple(row))
    return EnrichedVandermonde(gamma_plus_1, svec, nodes, tuple(rows))


def exact_rank(rows) -> int:
    """Rank of a matrix of field elements by exact elimination.

    Rows are cleared of coordinate denominators first (a nonzero scaling per
    row keeps the rank and limits bignum growth), then passed through the
    homogeneous-system kernel shared with solve_linear."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    field = rows[0][0].field
    ncols = len(rows[0])
    if ncols == 0:
        return 0
    scaled = []
    for row in rows:
        lcm = 1
        for e in row:
            lcm = lcm * e.den // math.gcd(lcm, e.den)
        scaled.append([e * lcm for e in row])
    zero = field.zero()
    res = solve_linear(scaled, [zero] * len(scaled))
    return ncols - res.nullity
