"""Exact rational geometry on and around the moment curve.

Points are tuples of Fraction coordinates, all in a fixed dimension d.
The moment curve sends a parameter t to (t, t^2, ..., t^d); configurations
of distinct parameters are vertices of a cyclic polytope.  Facet structure
(Gale's evenness condition), Radon-type hull intersections (Breen's
alternation criterion vs. exact LP feasibility), hyperplanes spanned by d
curve points, and a 2D convex-position subset finder all live here.

Inputs are never perturbed: degenerate data (duplicate points, shared
parameters, collinear triples where forbidden) is rejected, because the
oracle cross-checks in the test-suite rely on bit-true answers.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .lp import ZERO, ONE, feasible_eq_nonneg

Point = tuple[Fraction, ...]


class GeometryError(ValueError):
    """Degenerate or inconsistent geometric input."""


def rational(x) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise GeometryError(f"not an exact rational: {x!r}")


def point(coords) -> Point:
    return tuple(rational(c) for c in coords)


def moment_point(t, d: int) -> Point:
    """(t, t^2, ..., t^d) exactly."""
    if d < 1:
        raise GeometryError("dimension must be >= 1")
    t = rational(t)
    out = []
    acc = ONE
    for _ in range(d):
        acc = acc * t
        out.append(acc)
    return tuple(out)


def det(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    result = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        result *= pivot
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / pivot
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return sign * result


def orientation(points: list[Point]) -> int:
    """Sign of the (d+1)x(d+1) lifted determinant of d+1 points in R^d."""
    d = len(points[0])
    if len(points) != d + 1:
        raise GeometryError(f"orientation in R^{d} needs {d + 1} points")
    for p in points:
        if len(p) != d:
            raise GeometryError("mixed dimensions")
    value = det([[ONE] + list(p) for p in points])
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class MomentConfig:
    """Strictly increasing parameters and their moment-curve images."""

    d: int
    params: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 1:
            raise GeometryError("dimension must be >= 1")
        if len(self.params) < 1:
            raise GeometryError("need at least one parameter")
        for a, b in zip(self.params, self.params[1:]):
            if not a < b:
                raise GeometryError("parameters must be strictly increasing")

    @property
    def points(self) -> list[Point]:
        return [moment_point(t, self.d) for t in self.params]


def moment_config(params, d: int) -> MomentConfig:
    return MomentConfig(d, tuple(sorted(rational(t) for t in set(params))))


def hulls_intersect(classes: list[list[Point]]) -> bool:
    """Do the convex hulls of all classes share a common point?

    Exact feasibility: one block of barycentric weights per class, each
    block nonnegative and summing to 1, with class 1's combination equal
    to every other class's combination, coordinate by coordinate.
    """
    if not classes or any(len(c) == 0 for c in classes):
        raise GeometryError("every class must be nonempty")
    d = len(classes[0][0])
    for cls in classes:
        for p in cls:
            if len(p) != d:
                raise GeometryError("all points must share one dimension")
    k = len(classes)
    if k == 1:
        return True

    sizes = [len(c) for c in classes]
    offsets = []
    total = 0
    for s in sizes:
        offsets.append(total)
        total += s

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(k):  # each block sums to one
        row = [ZERO] * total
        for j in range(sizes[i]):
            row[offsets[i] + j] = ONE
        rows.append(row)
        rhs.append(ONE)
    for i in range(1, k):  # block 1 combination == block i combination
        for c in range(d):
            row = [ZERO] * total
            for j, p in enumerate(classes[0]):
                row[offsets[0] + j] = p[c]
            for j, p in enumerate(classes[i]):
                row[offsets[i] + j] = -p[c]
            rows.append(row)
            rhs.append(ZERO)
    return feasible_eq_nonneg(rows, rhs)


def breen_intersect(positions_a, positions_b, d: int) -> bool:
    """Breen's criterion on the moment curve in R^d, purely combinatorial:
    the two parameter sets interleave with at least d+2 blocks."""
    if d < 1:
        raise GeometryError("dimension must be >= 1")
    a = sorted(rational(t) for t in positions_a)
    b = sorted(rational(t) for t in positions_b)
    if set(a) & set(b):
        raise GeometryError("parameter sets must be disjoint")
    merged = sorted([(t, "a") for t in a] + [(t, "b") for t in b])
    blocks = 0
    prev = None
    for _, label in merged:
        if label != prev:
            blocks += 1
            prev = label
    return blocks >= d + 2


def gale_facets(r: int, d: int) -> list[tuple[int, ...]]:
    """Facets of the cyclic polytope C(r, d) by the evenness condition.

    Returns all d-subsets S of {1..r} such that every pair of indices
    outside S has an even number of S-elements strictly between them.
    """
    if d < 2:
        raise GeometryError("dimension must be >= 2")
    if r <= d:
        raise GeometryError(f"need more points than the dimension (r={r}, d={d})")
    facets = []
    for sub in combinations(range(1, r + 1), d):
        inside = set(sub)
        outside = [i for i in range(1, r + 1) if i not in inside]
        ok = True
        for x, y in combinations(outside, 2):
            between = sum(1 for s in sub if x < s < y)
            if between % 2:
                ok = False
                break
        if ok:
            facets.append(sub)
    return facets


@dataclass(frozen=True)
class Hyperplane:
    """normal . q = offset, with the normal a primitive integer-like vector
    whose first nonzero entry is positive (deterministic serialization)."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        if all(a == 0 for a in self.normal):
            raise GeometryError("hyperplane normal must be nonzero")

    def side(self, q: Point) -> int:
        value = sum(a * x for a, x in zip(self.normal, q)) - self.offset
        return (value > 0) - (value < 0)


def _canonical_hyperplane(normal: list[Fraction], offset: Fraction) -> Hyperplane:
    from math import gcd

    denom_lcm = 1
    for a in list(normal) + [offset]:
        denom_lcm = denom_lcm * a.denominator // gcd(denom_lcm, a.denominator)
    ints = [int(a * denom_lcm) for a in normal] + [int(offset * denom_lcm)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    first = next(v for v in ints[:-1] if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return Hyperplane(tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1]))


def hyperplane_through_points(points: list[Point]) -> Hyperplane:
    """The hyperplane spanned by d affinely independent points in R^d,
    with normal from cofactor expansion of the lifted determinant."""
    d = len(points[0])
    if len(points) != d:
        raise GeometryError(f"a hyperplane in R^{d} needs exactly {d} points")
    # Row j of M is (1, p_j); solve for (c0, n) with n . p_j + c0 = 0 via
    # cofactors of the (d+1)-column system [1 | coords].
    cof = []
    for col in range(d + 1):
        minor = []
        for p in points:
            row = [ONE] + list(p)
            minor.append(row[:col] + row[col + 1 :])
        sign = -1 if col % 2 else 1
        cof.append(sign * det(minor))
    normal = cof[1:]
    if all(a == 0 for a in normal):
        raise GeometryError("points do not span a hyperplane")
    return _canonical_hyperplane(normal, -cof[0])


def hyperplane_through_moment_points(params, d: int) -> Hyperplane:
    """Hyperplane through x(t_1)..x(t_d) on the moment curve in R^d.

    Consecutive parameter regions fall on alternating sides (the sign of
    the lifted determinant is a Vandermonde in the parameters).
    """
    ts = [rational(t) for t in params]
    if len(set(ts)) != len(ts):
        raise GeometryError("duplicate hyperplane parameters")
    if len(ts) != d:
        raise GeometryError(f"need exactly {d} parameters in R^{d}")
    return hyperplane_through_points([moment_point(t, d) for t in sorted(ts)])


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _check_general_position_2d(points: list[Point]):
    if len(set(points)) != len(points):
        raise GeometryError("duplicate points")
    for i, j, k in combinations(range(len(points)), 3):
        if _cross(points[i], points[j], points[k]) == 0:
            raise GeometryError(
                f"collinear triple at indices ({i}, {j}, {k}): "
                f"{points[i]}, {points[j]}, {points[k]}"
            )


def convex_position_subset_2d(points: list[Point], n: int) -> list[Point] | None:
    """Some n of the given 2D points in convex position (cyclic order), or
    None.  Dynamic programming over angularly ordered point pairs, anchored
    at each candidate lexicographic-minimum vertex.  Points must be in
    general position; a collinear triple is rejected with its indices.
    """
    for p in points:
        if len(p) != 2:
            raise GeometryError("points must be 2-dimensional")
    _check_general_position_2d(points)
    if n < 1:
        raise GeometryError("target size must be >= 1")
    if n <= 2:
        return list(points[:n]) if len(points) >= n else None

    pts = sorted(points)
    best: list[Point] | None = None
    for idx, anchor in enumerate(pts):
        others = pts[idx + 1 :]
        if len(others) + 1 < n:
            break
        # sort by angle around the anchor (all angles within a half-plane)
        def cmp(a, b):
            c = _cross(anchor, a, b)
            return -1 if c > 0 else 1

        ordered = sorted(others, key=functools.cmp_to_key(cmp))
        k = len(ordered)
        # chain[i][j]: longest convex chain anchor -> ... -> ordered[i] -> ordered[j]
        chain = [[2] * k for _ in range(k)]
        parent: dict[tuple[int, int], tuple[int, int] | None] = {}
        result_len = 2
        result_pair = None
        for j in range(k):
            for i in range(j):
                chain[i][j] = 3
                parent[(i, j)] = None
        for i in range(k):
            for j in range(i + 1, k):
                for l in range(j + 1, k):
                    if _cross(ordered[i], ordered[j], ordered[l]) > 0:
                        if chain[i][j] + 1 > chain[j][l]:
                            chain[j][l] = chain[i][j] + 1
                            parent[(j, l)] = (i, j)
        for i in range(k):
            for j in range(i + 1, k):
                # close the polygon: turn at ordered[j] back to the anchor
                if _cross(ordered[i], ordered[j], anchor) > 0 and chain[i][j] > result_len:
                    result_len = chain[i][j]
                    result_pair = (i, j)
        if result_pair is not None and result_len >= n:
            # reconstruct the chain back from the closing pair
            seq = []
            pair = result_pair
            while pair is not None:
                seq.append(ordered[pair[1]])
                nxt = parent.get(pair)
                if nxt is None:
                    seq.append(ordered[pair[0]])
                pair = nxt
            seq.append(anchor)
            seq.reverse()  # anchor first, counterclockwise
            if len(seq) >= n and (best is None or len(seq) > len(best)):
                best = seq
        if best is not None and len(best) >= n:
            break
    if best is None or len(best) < n:
        return None
    # a cyclic-order subsequence of a convex polygon stays in convex position
    return best[:n]
