"""Exact planar geometry core: orientation, segment crossing, convex hulls
and hull visibility from an external point.

Every predicate decides by the sign of an integer determinant; no branch
anywhere in this module compares floating-point values. Points of a point
set carry plain integer coordinates. Derived points (line intersections,
midpoints, separating-line anchors) are exact rationals represented as
homogeneous integer triples (x, y, w) with w > 0, so mixed predicates stay
in integer arithmetic.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    CollinearTriple,
    CoordinateRange,
    DuplicatePoint,
    PointNotOutsideHull,
)

#: Coordinate bound for point-set members. Keeps 3-point determinants well
#: inside 128-bit intermediates for ports to fixed-width languages; Python
#: itself would not overflow.
COORD_LIMIT = 1 << 30

CCW = 1
CW = -1
COLLINEAR = 0


class Point(NamedTuple):
    x: int
    y: int


class HomPoint(NamedTuple):
    """Exact rational point (x/w, y/w), w > 0."""

    x: int
    y: int
    w: int


def hom(p) -> HomPoint:
    """Lift a Point (or HomPoint) to homogeneous coordinates."""
    if len(p) == 3:
        return p
    return HomPoint(p[0], p[1], 1)


def hom_midpoint(p, q) -> HomPoint:
    px, py, pw = hom(p)
    qx, qy, qw = hom(q)
    return _reduce_hom(px * qw + qx * pw, py * qw + qy * pw, 2 * pw * qw)


def _reduce_hom(x, y, w):
    g = gcd(gcd(abs(x), abs(y)), w)
    if g > 1:
        x //= g
        y //= g
        w //= g
    return HomPoint(x, y, w)


def line_intersection(a, da, b, db) -> Optional[HomPoint]:
    """Intersection of the line through integer point `a` with direction
    `da` and the line through `b` with direction `db`; None if parallel."""
    den = da[0] * db[1] - da[1] * db[0]
    if den == 0:
        return None
    num = (b[0] - a[0]) * db[1] - (b[1] - a[1]) * db[0]
    x = a[0] * den + da[0] * num
    y = a[1] * den + da[1] * num
    if den < 0:
        x, y, den = -x, -y, -den
    return _reduce_hom(x, y, den)


def orient(a, b, c) -> int:
    """Sign of the turn a -> b -> c: CCW (+1), CW (-1) or COLLINEAR (0).

    `c` lies strictly to the right of the directed line a -> b iff the
    result is CW; strictly to the left iff CCW. Accepts any mix of Point
    and HomPoint arguments.
    """
    if len(a) == 3 or len(b) == 3 or len(c) == 3:
        ax, ay, aw = hom(a)
        bx, by, bw = hom(b)
        cx, cy, cw = hom(c)
        d = (
            ax * (by * cw - bw * cy)
            - ay * (bx * cw - bw * cx)
            + aw * (bx * cy - by * cx)
        )
    else:
        d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return CCW
    if d < 0:
        return CW
    return COLLINEAR


def segments_cross(a, b, c, d) -> bool:
    """True iff the open segments ab and cd share a point.

    Under general position on distinct endpoints this reduces to the
    proper-crossing test via four orientations. Segments that merely share
    an endpoint, or touch at an endpoint of one of them, do not cross;
    collinear segments cross iff their open intervals overlap.
    """
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == o2:
        if o1 != 0:
            return False
        return _collinear_open_overlap(a, b, c, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o3 == o4:
        return False
    # any zero sign means the only candidate shared point is an endpoint
    # of one segment, which open segments exclude
    return o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0


def _collinear_open_overlap(a, b, c, d) -> bool:
    axis = 0 if a[0] != b[0] else 1
    lo1, hi1 = sorted((a[axis], b[axis]))
    lo2, hi2 = sorted((c[axis], d[axis]))
    return max(lo1, lo2) < min(hi1, hi2)


def point_in_open_triangle(p, a, b, c) -> bool:
    s1 = orient(a, b, p)
    s2 = orient(b, c, p)
    s3 = orient(c, a, p)
    return s1 == s2 == s3 and s1 != 0


class PointSet:
    """Indexed, validated general-position point collection.

    Construction rejects duplicate points, collinear triples and
    out-of-range coordinates; every later operation may therefore assume
    general position. Immutable once built.
    """

    __slots__ = ("pts",)

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = [Point(int(p[0]), int(p[1])) for p in points]
        _check_general_position(pts)
        self.pts = pts

    def __len__(self):
        return len(self.pts)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.pts == other.pts

    def __repr__(self):
        return f"PointSet({self.pts!r})"

    def point(self, i: int) -> Point:
        return self.pts[i]

    def indices(self):
        return range(len(self.pts))

    def orient(self, i: int, j: int, k: int) -> int:
        a = self.pts[i]
        b = self.pts[j]
        c = self.pts[k]
        d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (d > 0) - (d < 0)


def validate_general_position(points: Iterable[Sequence[int]]) -> PointSet:
    """Build a PointSet, rejecting duplicates and collinear triples.

    Raises DuplicatePoint, CollinearTriple or CoordinateRange naming the
    violating indices.
    """
    return PointSet(points)


def _check_general_position(pts: Sequence[Point]) -> None:
    seen = {}
    for i, p in enumerate(pts):
        if abs(p.x) > COORD_LIMIT or abs(p.y) > COORD_LIMIT:
            raise CoordinateRange(i, COORD_LIMIT)
        if p in seen:
            raise DuplicatePoint(seen[p], i)
        seen[p] = i
    # For each anchor point, hash canonical directions to the others; two
    # later points sharing a direction line (either ray) close a collinear
    # triple with the anchor. O(n^2) overall instead of the naive O(n^3).
    n = len(pts)
    for i in range(n):
        ax, ay = pts[i]
        dirs = {}
        for j in range(i + 1, n):
            dx = pts[j].x - ax
            dy = pts[j].y - ay
            g = gcd(abs(dx), abs(dy))
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            key = (dx, dy)
            if key in dirs:
                raise CollinearTriple(i, dirs[key], j)
            dirs[key] = j


def convex_hull(ps: PointSet, subset: Optional[Iterable[int]] = None) -> tuple:
    """Extreme points of `subset` (default: all) in counterclockwise order.

    Under general position no hull edge contains a third point, so the
    result is the strict hull.
    """
    pts = ps.pts
    if subset is None:
        order = sorted(range(len(pts)), key=lambda i: pts[i])
    else:
        order = sorted(subset, key=lambda i: pts[i])
    if len(order) <= 2:
        return tuple(order)

    def build(seq):
        out = []
        for i in seq:
            c = pts[i]
            while len(out) >= 2:
                a = pts[out[-2]]
                b = pts[out[-1]]
                if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) <= 0:
                    out.pop()
                else:
                    break
            out.append(i)
        return out

    lower = build(order)
    upper = build(reversed(order))
    return tuple(lower[:-1] + upper[:-1])


def hull_neighbors(hull: Sequence[int], v: int) -> tuple:
    """(clockwise, counterclockwise) neighbors of v on a ccw hull."""
    pos = hull.index(v)
    return hull[pos - 1], hull[(pos + 1) % len(hull)]


def cw_neighbor(hull: Sequence[int], v: int) -> int:
    """Neighbor u of v with the hull to the right of the directed line
    v -> u, i.e. the predecessor of v in counterclockwise order."""
    return hull[hull.index(v) - 1]


def ccw_neighbor(hull: Sequence[int], v: int) -> int:
    return hull[(hull.index(v) + 1) % len(hull)]


def visible_hull_points(ps: PointSet, p, subset: Iterable[int]) -> tuple:
    """Hull points of `subset` visible from the external point `p`.

    q is visible iff the segment pq meets the hull of the subset only at
    q. The result is a contiguous arc of the hull, listed in ccw order;
    it has at least two points whenever the subset does.
    """
    return visible_on_hull(ps, p, convex_hull(ps, subset))


def visible_on_hull(ps: PointSet, p, hull: Sequence[int]) -> tuple:
    """Like visible_hull_points but with the hull precomputed."""
    pts = ps.pts
    m = len(hull)
    if m == 1:
        if hom(p) == hom(pts[hull[0]]):
            raise PointNotOutsideHull("query point coincides with the hull point")
        return (hull[0],)
    if m == 2:
        a, b = pts[hull[0]], pts[hull[1]]
        if orient(a, b, p) != 0:
            return tuple(hull)
        # p on the segment's line: only the nearer endpoint is visible
        dab = ((b[0] - a[0]), (b[1] - a[1]))
        ta = (p[0] - a[0]) * dab[0] + (p[1] - a[1]) * dab[1]
        tb = (p[0] - b[0]) * dab[0] + (p[1] - b[1]) * dab[1]
        if ta < 0:
            return (hull[0],)
        if tb > 0:
            return (hull[1],)
        raise PointNotOutsideHull("query point lies on the hull segment")
    # an edge whose supporting line passes through p is seen edge-on and
    # counts as back-facing: only its near endpoint is visible, via the
    # endpoint's other incident edge
    front = [
        orient(pts[hull[i]], pts[hull[(i + 1) % m]], p) == CW for i in range(m)
    ]
    if not any(front):
        raise PointNotOutsideHull("query point lies in the hull")
    if all(front):  # cannot happen for a bounded polygon
        raise PointNotOutsideHull("degenerate visibility query")
    # front-facing edges form one contiguous arc; the visible vertices are
    # exactly the endpoints of that arc's edges
    start = next(i for i in range(m) if front[i] and not front[i - 1])
    count = 1
    j = start
    while front[j]:
        count += 1
        j = (j + 1) % m
    return tuple(hull[(start + k) % m] for k in range(count))
