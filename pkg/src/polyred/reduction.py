"""Reducibility across cardinalities.

A polynomial P witnesses A <= B when A = P^{-1}(B) exactly.  The certificate
used everywhere is factorization-free: P(A) = B as sets and, for every target
b, the root multiplicities of P - b at its preimages in A sum to deg P.  The
multiplicity sum equals the degree iff P - b has no roots outside A, so the
certificate is equivalent to exact preimage.

find_reductions enumerates assignments of A's elements to B's elements fiber
by fiber.  It walks the first gamma+1 elements as an incremental Newton
interpolation (divided differences with cached inverse differences), rejects
prefixes whose fiber exceeds gamma elements or whose leading coefficient
vanishes, then checks the forced values of the remaining elements.  This is
the plain assignment-plus-interpolation search, just ordered so that shared
prefixes are interpolated once.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classes import ClassInvariant, FiniteSubset, canonical_invariant, equivalent
from .field import _check_same_field
from .poly import LinearMap, Poly, _coerce


@dataclass(frozen=True)
class DegreeWindow:
    """Admissible degrees for a reduction from m elements onto n."""

    m: int
    n: int
    gammas: tuple[int, ...]


def degree_bounds(m: int, n: int) -> DegreeWindow:
    """Integer degrees gamma with m/n <= gamma <= (m-1)/(n-1)."""
    if not 2 <= n < m:
        raise ValueError("degree bounds need 2 <= n < m")
    lo = -(-m // n)
    hi = (m - 1) // (n - 1)
    return DegreeWindow(m, n, tuple(range(lo, hi + 1)))


@dataclass(frozen=True)
class Reduction:
    """Verified witness P with source = P^{-1}(target).

    fibers lists, for each target element b in ascending order, the pairs
    (a, e) of preimages with their root multiplicities in P - b; each fiber's
    multiplicities sum to gamma.
    """

    poly: Poly
    source: FiniteSubset
    target: FiniteSubset
    gamma: int
    fibers: tuple

    def to_json_obj(self) -> dict:
        return {
            "degree": self.gamma,
            "coeffs": self.poly.encode(),
            "fibers": [
                {
                    "target": b.encode(),
                    "preimages": [{"a": a.encode(), "multiplicity": e}
                                  for a, e in pre],
                }
                for b, pre in self.fibers
            ],
        }


def _fiber_certificate(P: Poly, A: FiniteSubset, B: FiniteSubset):
    """The fiber data proving A = P^{-1}(B), or None when it fails.

    Derivatives of P are computed once; the multiplicity of a in P - b is the
    least k >= 1 with P^(k)(a) nonzero (P(a) = b is checked first).
    """
    gamma = P.degree
    groups = {}
    for a in A.elems:
        v = P(a)
        if v not in B:
            return None
        groups.setdefault(v, []).append(a)
    if len(groups) != len(B):
        return None
    derivs = [P.derivative()]
    fibers = []
    for b in B.elems:
        pre = []
        total = 0
        for a in groups[b]:
            e = 1
            while True:
                while len(derivs) < e:
                    derivs.append(derivs[-1].derivative())
                if not derivs[e - 1](a).is_zero():
                    break
                e += 1
            pre.append((a, e))
            total += e
        if total != gamma:
            return None
        fibers.append((b, tuple(pre)))
    return tuple(fibers)


def check_exact_preimage(P, A: FiniteSubset, B: FiniteSubset) -> bool:
    """Whether P(A) = B with full multiplicity in every fiber (so A = P^{-1}(B))."""
    if isinstance(P, LinearMap):
        P = P.to_poly()
    if P.is_zero() or P.degree < 1:
        raise ValueError("constant polynomial cannot witness a reduction")
    return _fiber_certificate(P, A, B) is not None


def _newton_to_poly(field, coeffs, xs) -> Poly:
    acc = [coeffs[-1]]
    for t in range(len(coeffs) - 2, -1, -1):
        xt = xs[t]
        nxt = [field.zero()] + acc
        for i, c in enumerate(acc):
            nxt[i] = nxt[i] - xt * c
        nxt[0] = nxt[0] + coeffs[t]
        acc = nxt
    return Poly(field, acc)


def _search_degree(A: FiniteSubset, B: FiniteSubset, gamma: int, out: list,
                   first_only: bool) -> None:
    field = A.field
    xs = A.elems
    m = len(xs)
    targets = B.elems
    nb = len(targets)
    k = gamma + 1  # free prefix; the remaining m - k values are forced
    invd = [[(xs[i] - xs[j]).inverse() for j in range(i)] for i in range(k)]
    counts = dict.fromkeys(targets, 0)

    def rec(depth: int, dd: list, coeffs: list, used: int) -> None:
        if first_only and out:
            return
        if depth == k:
            if coeffs[-1].is_zero():
                return  # degree dropped below gamma
            P = _newton_to_poly(field, coeffs, xs)
            tail = {}
            for i in range(k, m):
                v = P(xs[i])
                if v not in B:
                    return
                c = counts[v] + tail.get(v, 0)
                if c >= gamma:
                    return  # a degree-gamma fiber has at most gamma elements
                tail[v] = tail.get(v, 0) + 1
            for b in targets:
                if counts[b] == 0 and b not in tail:
                    return  # not onto
            fibers = _fiber_certificate(P, A, B)
            if fibers is not None:
                out.append(Reduction(P, A, B, gamma, fibers))
            return
        x = xs[depth]
        row = invd[depth]
        for v in targets:
            if counts[v] >= gamma:
                continue
            newly = 1 if counts[v] == 0 else 0
            if nb - (used + newly) > m - depth - 1:
                continue  # too few elements left to reach every target
            ndd = [v]
            for j in range(depth):
                ndd.append((ndd[j] - dd[j]) * row[depth - 1 - j])
            counts[v] += 1
            coeffs.append(ndd[-1])
            rec(depth + 1, ndd, coeffs, used + newly)
            coeffs.pop()
            counts[v] -= 1

    rec(0, [], [], 0)


def find_reductions(A: FiniteSubset, B: FiniteSubset,
                    first_only: bool = False) -> list:
    """All reductions from A onto B, sorted by (degree, coefficients).

    Degrees run over the admissible window; with equal cardinalities only
    degree 1 is possible, so the window collapses to {1}.  first_only stops
    at the first verified witness (existence queries)."""
    _check_same_field(A.elems[0], B.elems[0])
    m, n = len(A), len(B)
    if n < 2 or m < n:
        raise ValueError("reduction search needs 2 <= |B| <= |A|")
    gammas = (1,) if m == n else degree_bounds(m, n).gammas
    out: list[Reduction] = []
    for gamma in gammas:
        _search_degree(A, B, gamma, out, first_only)
        if first_only and out:
            break
    out.sort(key=lambda r: (r.gamma, r.poly.coeffs))
    return out


def singleton_reduction(A: FiniteSubset, b) -> Reduction:
    """The product witness prod(X - a) + b mapping all of A onto {b}."""
    field = A.field
    b = _coerce(field, b)
    P = Poly.from_roots(field, [(a, 1) for a in A.elems]) + Poly(field, [b])
    target = FiniteSubset(field, [b])
    fibers = _fiber_certificate(P, A, target)
    if fibers is None:
        raise ArithmeticError("product witness failed exact verification")
    return Reduction(P, A, target, len(A), fibers)


def reduces(A: FiniteSubset, B: FiniteSubset) -> bool:
    """Decide A <= B across all cardinality cases."""
    m, n = len(A), len(B)
    if m < n:
        return False
    if m == n:
        return equivalent(A, B)
    if n == 1:
        return True
    return bool(find_reductions(A, B, first_only=True))


def compositions(total: int, parts: int):
    """Tuples of `parts` positive integers summing to `total`, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        prev = 0
        seg = []
        for c in list(cuts) + [total]:
            seg.append(c - prev)
            prev = c
        yield tuple(seg)


@dataclass(frozen=True)
class SuccessorClass:
    """One class reachable from A; trivial entries ([A] itself and the
    singleton class) carry no witness."""

    invariant: ClassInvariant
    witness: Reduction | None
    trivial: bool


def successors(A: FiniteSubset, max_degree: int | None = None) -> list:
    """The complete finite set of classes reachable from A.

    Candidates are built from the root data of a prospective witness: a
    support I of p <= gamma elements of A with positive multiplicities
    summing to gamma, normalized so the least element j outside I maps to 1
    (other normalizations rescale the image linearly and cannot add classes).
    Every image set through gamma = m-1 (or max_degree) is tested with the
    exact preimage certificate and deduplicated by canonical invariant; [A]
    and the singleton class are appended as trivial entries.
    """
    m = len(A)
    if m < 2:
        raise ValueError("successor enumeration needs at least 2 elements")
    field = A.field
    xs = A.elems
    out: dict[str, SuccessorClass] = {}
    self_inv = canonical_invariant(A)
    out[self_inv.key()] = SuccessorClass(self_inv, None, True)
    sigma1 = ClassInvariant(1, ())
    out[sigma1.key()] = SuccessorClass(sigma1, None, True)
    top = m - 1 if max_degree is None else min(m - 1, max_degree)
    zero = field.zero()
    seen_images = set()
    for gamma in range(2, top + 1):
        for p in range(1, min(gamma, m - 1) + 1):
            for I in combinations(range(m), p):
                in_support = set(I)
                others = [j for j in range(m) if j not in in_support]
                # The choice of j only rescales the image (c = 1/base(x_j)),
                # so one representative per support suffices for classes.
                j = others[0]
                for mults in compositions(gamma, p):
                    base = Poly.from_roots(field,
                                           [(xs[i], e) for i, e in zip(I, mults)])
                    imgs = {zero} | {base(xs[t]) for t in others}
                    if not 2 <= len(imgs) < m:
                        continue
                    W = FiniteSubset(field, imgs)
                    if W.elems in seen_images:
                        continue
                    seen_images.add(W.elems)
                    if _fiber_certificate(base, A, W) is None:
                        continue
                    inv = canonical_invariant(W)
                    key = inv.key()
                    if key in out:
                        continue
                    c = base(xs[j]).inverse()
                    P = base * c
                    B = W.map(lambda x: c * x)
                    fibers = _fiber_certificate(P, A, B)
                    if fibers is None:
                        raise ArithmeticError(
                            "certificate lost under witness normalization")
                    out[key] = SuccessorClass(
                        inv, Reduction(P, A, B, gamma, fibers), False)
    return sorted(out.values(), key=lambda sc: (sc.invariant.n, sc.invariant.key()))


def normalize_to_contain_0_1(A: FiniteSubset):
    """Linear image of A containing 0 and 1, with the witnessing map.

    Identity when {0,1} is already inside; otherwise the two least elements
    go to 0 and 1."""
    if len(A) < 2:
        raise ValueError("normalization needs at least 2 elements")
    field = A.field
    if field.zero() in A and field.one() in A:
        return A, LinearMap.identity(field)
    a1, a2 = A.elems[0], A.elems[1]
    slope = (a2 - a1).inverse()
    f = LinearMap(slope, -a1 * slope)
    return A.map(f), f


def predecessor_2n_minus_1(B: FiniteSubset,
                           denominator_bound: int = 10 ** 6) -> FiniteSubset:
    """The unique (2n-1)-element class mapping onto [B] quadratically.

    B is first normalized to contain {0,1}; the result {0, +-1, +-sqrt(b)} is
    verified against X^2 before returning.  A missing square root is reported
    as "not found in working field": the search is bounded by
    denominator_bound, so absence of a certificate is not a nonexistence
    proof."""
    n = len(B)
    if n < 2:
        raise ValueError("predecessor construction needs at least 2 elements")
    Bn, _ = normalize_to_contain_0_1(B)
    field = B.field
    elems = [field.zero(), field.one(), -field.one()]
    for b in Bn.elems:
        if b.is_zero() or b.is_one():
            continue
        root = b.sqrt(denominator_bound=denominator_bound)
        if root is None:
            raise ValueError(
                f"square root of {b} not found in working field "
                f"(denominator bound {denominator_bound})")
        elems.extend([root, -root])
    A = FiniteSubset(field, elems)
    if _fiber_certificate(Poly(field, [0, 0, 1]), A, Bn) is None:
        raise ArithmeticError("quadratic preimage failed exact verification")
    return A
