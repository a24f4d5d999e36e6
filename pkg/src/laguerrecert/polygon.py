"""Lower boundary polygons of valuation points, with exact rational slopes.

Orientation: for an expansion f = sum b_i * phi**i of length n+1, the point
at abscissa i carries the valuation of b_{n-i}, so the x-axis counts down
from the leading part.  Many texts use the opposite convention; everything
in this package uses this one.  Floating point is forbidden here: slopes
and tie detection are exact Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import PhiExpansion, gauss_valuation
from .primes import _require_prime

Point = tuple[int, int]


@dataclass(frozen=True)
class NewtonPolygon:
    """Materialized points plus the vertices of their lower boundary.

    Vertices obey the construction rule: from each vertex, move along the
    chord of minimal slope, and among chords of equal minimal slope take
    the one reaching the largest abscissa (so edges absorb collinear
    interior points).  Slopes strictly increase left to right.
    """

    points: tuple[Point, ...]
    vertices: tuple[Point, ...]

    @property
    def edges(self) -> tuple[tuple[Point, Point, Fraction], ...]:
        out = []
        for (i0, h0), (i1, h1) in zip(self.vertices, self.vertices[1:]):
            out.append(((i0, h0), (i1, h1), Fraction(h1 - h0, i1 - i0)))
        return tuple(out)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(e[2] for e in self.edges)

    def to_jsonable(self) -> dict:
        return {
            "vertices": [[i, h] for i, h in self.vertices],
            "slopes": [f"{s.numerator}/{s.denominator}" for s in self.slopes],
        }


def polygon_from_points(points) -> NewtonPolygon:
    """Lower boundary by the greedy minimal-slope rule (ties: largest index)."""
    pts = sorted(points)
    if not pts:
        raise ValueError("need at least one point")
    if len({i for i, _ in pts}) != len(pts):
        raise ValueError("indices must be distinct")
    vertices = [pts[0]]
    pos = 0
    while pos < len(pts) - 1:
        i0, h0 = pts[pos]
        best = None
        best_slope = None
        for j in range(pos + 1, len(pts)):
            i1, h1 = pts[j]
            s = Fraction(h1 - h0, i1 - i0)
            # <= keeps the farthest point on ties (pts sorted by index)
            if best_slope is None or s <= best_slope:
                best, best_slope = j, s
        vertices.append(pts[best])
        pos = best
    slopes = [Fraction(h1 - h0, i1 - i0)
              for (i0, h0), (i1, h1) in zip(vertices, vertices[1:])]
    assert all(a < b for a, b in zip(slopes, slopes[1:])), "slopes must increase"
    return NewtonPolygon(points=tuple(pts), vertices=tuple(vertices))


def build_polygon(expansion: PhiExpansion, p: int) -> NewtonPolygon:
    """Polygon of an expansion with respect to p, leading part at abscissa 0.

    Requires both the constant part and the leading part to be nonzero;
    a zero constant part means the base polynomial divides the target and
    must be stripped first.
    """
    _require_prime(p)
    parts = expansion.parts
    if not parts or parts[-1].is_zero:
        raise ValueError("expansion must have a nonzero leading part")
    if parts[0].is_zero:
        raise ValueError(
            "constant part is zero: the target is divisible by the base; "
            "strip that factor before building the polygon")
    n = expansion.n
    points = []
    for i in range(n + 1):
        part = parts[n - i]
        if not part.is_zero:
            points.append((i, gauss_valuation(p, part)))
    return polygon_from_points(points)


def bruteforce_lower_hull(points) -> NewtonPolygon:
    """Lower boundary recomputed from the pairwise-slope definition.

    Test oracle, O(n^2) and independent of the greedy construction: a point
    lies on the lower boundary iff its maximal slope from the left does not
    exceed its minimal slope to the right (no chord passes strictly below
    it), and it is a vertex iff that inequality is strict (equality means
    it sits inside a straight edge).
    """
    pts = sorted(points)
    if len(pts) < 2:
        raise ValueError("need at least two points")
    if len({i for i, _ in pts}) != len(pts):
        raise ValueError("indices must be distinct")

    vertices = [pts[0]]
    for idx in range(1, len(pts) - 1):
        i, h = pts[idx]
        left_max = max(Fraction(h - hj, i - ij) for ij, hj in pts[:idx])
        right_min = min(Fraction(hj - h, ij - i) for ij, hj in pts[idx + 1:])
        if left_max < right_min:
            vertices.append((i, h))
    vertices.append(pts[-1])
    return NewtonPolygon(points=tuple(pts), vertices=tuple(vertices))


def rightmost_slope(polygon: NewtonPolygon) -> Fraction:
    """Slope of the final edge; cross-checked against the chord maximum.

    The final edge slope equals the maximum over all earlier points of the
    chord slope to the last vertex; both are computed and must agree.
    """
    edges = polygon.edges
    if not edges:
        raise ValueError("polygon has no edges")
    last = edges[-1][2]
    iN, hN = polygon.vertices[-1]
    chord_max = max(Fraction(hN - h, iN - i) for i, h in polygon.points if i < iN)
    assert last == chord_max, "final edge must realize the maximal chord slope"
    return last
