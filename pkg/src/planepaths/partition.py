"""Balanced separated partitions of a point set and the structures living
on them: separating lines, bridges, balancing and halving lines, the
bipartite hull-visibility graph and switchable paths.

A partition stores its separating line as two exact anchor points (set
points or derived rationals); every side test is an integer orientation
sign against that line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from .errors import (
    InternalError,
    NoValidChoice,
    OddCardinality,
    PointOnLine,
    PreconditionViolated,
    Unbalanced,
)
from .geom import (
    CCW,
    CW,
    Point,
    PointSet,
    _reduce_hom,
    convex_hull,
    hom,
    hom_midpoint,
    orient,
    point_in_open_triangle,
    segments_cross,
    visible_on_hull,
)


@dataclass(frozen=True)
class Partition:
    """A balanced separated partition: s1 strictly left of the directed
    separating line sep_a -> sep_b, s2 strictly right, hulls disjoint.

    `bridges` are the two hull edges of s1+s2 crossing the line, each as
    (s1 endpoint, s2 endpoint), ordered by their crossing position along
    the line; bridges[0] is the left bridge.
    """

    s1: Tuple[int, ...]
    s2: Tuple[int, ...]
    sep_a: object
    sep_b: object
    bridges: Tuple[Tuple[int, int], ...]

    def universe(self) -> Tuple[int, ...]:
        return tuple(sorted(self.s1 + self.s2))

    def side(self, i: int) -> int:
        """1 or 2."""
        if i in self.s1:
            return 1
        if i in self.s2:
            return 2
        raise KeyError(i)

    def bridged_vertices(self) -> Tuple[int, ...]:
        return tuple(sorted({v for e in self.bridges for v in e}))


def line_side(ps: PointSet, sep_a, sep_b, i: int) -> int:
    return orient(sep_a, sep_b, ps.pts[i])


def crossing_param(sep_a, sep_b, p: Point, q: Point) -> Fraction:
    """Position along the directed line sep_a -> sep_b where segment pq
    crosses it, as an exact fraction. Requires pq not parallel to it."""
    ax, ay, aw = hom(sep_a)
    bx, by, bw = hom(sep_b)
    dx = bx * aw - ax * bw
    dy = by * aw - ay * bw
    ex = q[0] - p[0]
    ey = q[1] - p[1]
    den = dx * ey - dy * ex
    if den == 0:
        raise PreconditionViolated("segment is parallel to the separating line")
    num = bw * ((p[0] * aw - ax) * ey - (p[1] * aw - ay) * ex)
    return Fraction(num, den)


def separating_line(ps: PointSet, side1: Sequence[int], side2: Sequence[int]):
    """Exact anchors (A, B) of a line with side1 strictly to the left of
    A -> B and side2 strictly to the right.

    Uses the perpendicular bisector of the shortest segment between the
    two hulls; raises InternalError if the hulls are not disjoint.
    """
    pts = ps.pts
    h1 = convex_hull(ps, side1)
    h2 = convex_hull(ps, side2)
    best = None  # (num, den, e1, e2)

    def consider(num, den, e1, e2):
        nonlocal best
        if best is None or num * best[1] < best[0] * den:
            best = (num, den, e1, e2)

    for i in h1:
        p = pts[i]
        for j in h2:
            q = pts[j]
            consider((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2, 1, hom(p), hom(q))

    def vertex_edge(vs, hull_other):
        m = len(hull_other)
        if m < 2:
            return
        edges = [(hull_other[k], hull_other[(k + 1) % m]) for k in range(m)]
        if m == 2:
            edges = edges[:1]
        for i in vs:
            p = pts[i]
            for (ja, jb) in edges:
                a = pts[ja]
                b = pts[jb]
                ux, uy = b[0] - a[0], b[1] - a[1]
                t = (p[0] - a[0]) * ux + (p[1] - a[1]) * uy
                ll = ux * ux + uy * uy
                if 0 < t < ll:
                    cr = (p[0] - a[0]) * uy - (p[1] - a[1]) * ux
                    foot = _reduce_hom(a[0] * ll + t * ux, a[1] * ll + t * uy, ll)
                    consider(cr * cr, ll, hom(p), foot)

    vertex_edge(h1, h2)
    # symmetric: vertices of h2 against edges of h1, swapping realizer order
    m1 = len(h1)
    if m1 >= 2:
        edges1 = [(h1[k], h1[(k + 1) % m1]) for k in range(m1)]
        if m1 == 2:
            edges1 = edges1[:1]
        for j in h2:
            p = pts[j]
            for (ia, ib) in edges1:
                a = pts[ia]
                b = pts[ib]
                ux, uy = b[0] - a[0], b[1] - a[1]
                t = (p[0] - a[0]) * ux + (p[1] - a[1]) * uy
                ll = ux * ux + uy * uy
                if 0 < t < ll:
                    cr = (p[0] - a[0]) * uy - (p[1] - a[1]) * ux
                    foot = _reduce_hom(a[0] * ll + t * ux, a[1] * ll + t * uy, ll)
                    consider(cr * cr, ll, foot, hom(p))

    num, den, e1, e2 = best
    if num == 0:
        raise InternalError("sides are not separated", points=ps.pts)
    mid = hom_midpoint(e1, e2)
    vx = e2.x * e1.w - e1.x * e2.w
    vy = e2.y * e1.w - e1.y * e2.w
    a_anchor = mid
    b_anchor = _reduce_hom(mid.x - vy * mid.w, mid.y + vx * mid.w, mid.w)
    probe = next(iter(side1))
    if orient(a_anchor, b_anchor, pts[probe]) != CCW:
        a_anchor, b_anchor = b_anchor, a_anchor
    return a_anchor, b_anchor


def make_partition(ps: PointSet, side1, side2, sep_a=None, sep_b=None) -> Partition:
    """Build and validate a Partition with the given class sets.

    Computes a separating line when none is supplied. side1 ends up as s1
    (left of the stored direction) even if anchors had to be swapped.
    """
    s1 = tuple(sorted(side1))
    s2 = tuple(sorted(side2))
    if abs(len(s1) - len(s2)) > 1:
        raise Unbalanced(len(s1), len(s2))
    if set(s1) & set(s2):
        raise PreconditionViolated("partition classes overlap")
    if sep_a is None:
        sep_a, sep_b = separating_line(ps, s1, s2)
    for i in s1:
        if orient(sep_a, sep_b, ps.pts[i]) != CCW:
            raise InternalError(f"point {i} is not strictly left of the separating line", ps.pts)
    for i in s2:
        if orient(sep_a, sep_b, ps.pts[i]) != CW:
            raise InternalError(f"point {i} is not strictly right of the separating line", ps.pts)
    bridges = _bridges(ps, frozenset(s1), s1 + s2, sep_a, sep_b)
    return Partition(s1, s2, sep_a, sep_b, bridges)


def _bridges(ps, side1_set, universe, sep_a, sep_b):
    hull = convex_hull(ps, universe)
    m = len(hull)
    found = []
    for k in range(m):
        i = hull[k]
        j = hull[(k + 1) % m]
        if m == 2 and k == 1:
            break
        if (i in side1_set) != (j in side1_set):
            e = (i, j) if i in side1_set else (j, i)
            found.append(e)
    if len(found) == 1 and m == 2:
        # degenerate 1+1 partition: the single hull edge is both bridges
        found.append(found[0])
    if len(found) != 2:
        raise InternalError(f"expected 2 bridges, found {len(found)}", ps.pts)
    found.sort(key=lambda e: crossing_param(sep_a, sep_b, ps.pts[e[0]], ps.pts[e[1]]))
    return tuple(found)


def partition_by_line(ps: PointSet, subset, la, lb) -> Partition:
    """Split `subset` by the directed line la -> lb into a balanced
    separated partition; s1 is the left side."""
    left = []
    right = []
    for i in subset:
        s = orient(la, lb, ps.pts[i])
        if s == 0:
            raise PointOnLine(i)
        (left if s == CCW else right).append(i)
    if abs(len(left) - len(right)) > 1:
        raise Unbalanced(len(left), len(right))
    if not left or not right:
        raise PreconditionViolated("a partition side is empty")
    bridges = _bridges(ps, frozenset(left), tuple(left) + tuple(right), la, lb)
    return Partition(tuple(sorted(left)), tuple(sorted(right)), la, lb, bridges)


def angular_order(ps: PointSet, u: int, subset) -> list:
    """Indices of `subset` minus u, sorted counterclockwise by direction
    from u. Requires u extreme in the subset so that all directions fit in
    an open half-plane and the order is total."""
    pts = ps.pts
    ux, uy = pts[u]
    items = [i for i in subset if i != u]

    def cmp(i, j):
        a = pts[i]
        b = pts[j]
        c = (a[0] - ux) * (b[1] - uy) - (a[1] - uy) * (b[0] - ux)
        if c > 0:
            return -1
        if c < 0:
            return 1
        raise PreconditionViolated(
            "angular order around a non-extreme point or collinear input"
        )

    items.sort(key=cmp_to_key(cmp))
    return items


def is_halving_pair(ps: PointSet, x: int, y: int, subset=None) -> bool:
    """True iff the line xy leaves exactly (n-2)/2 subset points strictly
    on each side."""
    if subset is None:
        subset = range(len(ps))
    left = right = total = 0
    for i in subset:
        total += 1
        if i == x or i == y:
            continue
        s = ps.orient(x, y, i)
        if s == CCW:
            left += 1
        elif s == CW:
            right += 1
        else:
            raise PreconditionViolated("collinear point on a candidate halving line")
    return left == right == (total - 2) // 2


def halving_segments(ps: PointSet, subset=None) -> list:
    """All pairs (x, y) whose line has exactly (n-2)/2 points strictly on
    each side. Requires even cardinality."""
    if subset is None:
        subset = tuple(range(len(ps)))
    else:
        subset = tuple(sorted(subset))
    if len(subset) % 2 != 0:
        raise OddCardinality(f"{len(subset)} points")
    out = []
    for ii in range(len(subset)):
        for jj in range(ii + 1, len(subset)):
            x, y = subset[ii], subset[jj]
            if is_halving_pair(ps, x, y, subset):
                out.append((x, y))
    return out


def halving_partner(ps: PointSet, u: int, subset=None) -> int:
    """The unique v making uv a halving segment, for u extreme and even
    cardinality: the median direction in the angular order around u."""
    if subset is None:
        subset = tuple(range(len(ps)))
    n = len(tuple(subset))
    if n % 2 != 0:
        raise OddCardinality(f"{n} points")
    order = angular_order(ps, u, subset)
    return order[n // 2 - 1]


def almost_balancing_lines_through(ps: PointSet, u: int, subset=None) -> tuple:
    """For odd cardinality and extreme u: the two points (a, b) whose
    lines through u split the rest (n-1)/2 : (n-3)/2, with b strictly to
    the right of the directed line u -> a. The open wedge between the rays
    u -> a and u -> b contains no point."""
    if subset is None:
        subset = tuple(range(len(ps)))
    n = len(tuple(subset))
    if n % 2 != 1:
        raise PreconditionViolated("almost-balancing lines need odd cardinality")
    order = angular_order(ps, u, subset)
    # ranks (n-1)/2 and (n+1)/2, 1-based; the later one in ccw order is a
    m1 = order[(n - 1) // 2 - 1]
    m2 = order[(n + 1) // 2 - 1]
    a, b = m2, m1
    if orient(ps.pts[u], ps.pts[a], ps.pts[b]) != CW:
        raise InternalError("almost-balancing orientation check failed", ps.pts)
    return a, b


def balancing_line_through_extreme(
    ps: PointSet, s: int, prefer_small_side: Optional[int] = None, subset=None
) -> Partition:
    """Balanced separated partition of subset minus s by a line through s
    and no other point.

    Realized by an angular sweep around s: the line direction is taken
    strictly between two consecutive directions. With an even number of
    remaining points the split is unique; with an odd number there are two
    candidate splits and `prefer_small_side` must land in the smaller one,
    otherwise NoValidChoice is raised.
    """
    if subset is None:
        subset = tuple(range(len(ps)))
    subset = tuple(subset)
    order = angular_order(ps, s, subset)
    m = len(order)
    if m < 2:
        raise PreconditionViolated("not enough points to partition")

    def cut(k):
        # line through s between order[k-1] and order[k]: k points before
        p = ps.pts[s]
        d1 = ps.pts[order[k - 1]]
        d2 = ps.pts[order[k]]
        direction = Point(d1[0] + d2[0] - 2 * p[0], d1[1] + d2[1] - 2 * p[1])
        anchor = Point(p[0] + direction[0], p[1] + direction[1])
        first, second = order[:k], order[k:]
        part = partition_by_line(ps, first + second, p, anchor)
        return part

    if m % 2 == 0:
        return cut(m // 2)
    low, high = (m - 1) // 2, (m + 1) // 2
    if prefer_small_side is None:
        return cut(low)
    rank = order.index(prefer_small_side) + 1
    if rank <= low:
        return cut(low)
    if rank >= high + 1:
        return cut(high)
    raise NoValidChoice(
        f"point {prefer_small_side} sits on the median line through {s}"
    )


@dataclass(frozen=True)
class VisibilityGraph:
    """Bipartite graph of mutually visible hull points of the two classes:
    (a, b) is an edge iff segment ab meets both hulls only at a and b."""

    edges: FrozenSet[Tuple[int, int]]
    adj: Dict[int, Tuple[int, ...]]
    hull1: Tuple[int, ...]
    hull2: Tuple[int, ...]

    def degree(self, v: int) -> int:
        return len(self.adj.get(v, ()))

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)


def visibility_graph(ps: PointSet, part: Partition) -> VisibilityGraph:
    pts = ps.pts
    h1 = convex_hull(ps, part.s1)
    h2 = convex_hull(ps, part.s2)
    sees2 = {a: frozenset(visible_on_hull(ps, pts[a], h2)) for a in h1}
    sees1 = {b: frozenset(visible_on_hull(ps, pts[b], h1)) for b in h2}
    edges = set()
    adj: Dict[int, list] = {}
    for a in h1:
        for b in sees2[a]:
            if a in sees1[b]:
                edges.add((a, b))
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
    return VisibilityGraph(
        frozenset(edges),
        {v: tuple(sorted(nb)) for v, nb in adj.items()},
        h1,
        h2,
    )


def find_crossing_pair(ps: PointSet, vg: VisibilityGraph):
    """First pair of visibility edges whose open segments cross, scanning
    edges in sorted order; None if no two edges cross."""
    pts = ps.pts
    edges = vg.sorted_edges()
    for i in range(len(edges)):
        a, b = edges[i]
        pa, pb = pts[a], pts[b]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if segments_cross(pa, pb, pts[c], pts[d]):
                return (edges[i], edges[j])
    return None


@dataclass(frozen=True)
class SwitchablePath:
    """Four vertices alternating between the classes whose three edges lie
    in the visibility graph, cross the separating line in path order, and
    whose two intermediate open triangles contain no point."""

    vertices: Tuple[int, int, int, int]

    def edges(self):
        v = self.vertices
        return ((v[0], v[1]), (v[1], v[2]), (v[2], v[3]))


def is_switchable(ps: PointSet, part: Partition, vg: VisibilityGraph, vertices) -> bool:
    v = tuple(vertices)
    if len(set(v)) != 4:
        return False
    for a, b in ((v[0], v[1]), (v[1], v[2]), (v[2], v[3])):
        if not vg.has_edge(a, b):
            return False
    pts = ps.pts
    params = []
    for a, b in ((v[0], v[1]), (v[1], v[2]), (v[2], v[3])):
        params.append(crossing_param(part.sep_a, part.sep_b, pts[a], pts[b]))
    if not (params[0] < params[1] < params[2] or params[0] > params[1] > params[2]):
        return False
    others = [i for i in part.universe() if i not in v]
    for tri in ((v[0], v[1], v[2]), (v[1], v[2], v[3])):
        a, b, c = (pts[t] for t in tri)
        for w in others:
            if point_in_open_triangle(pts[w], a, b, c):
                return False
    return True


def find_switchable_path3(ps: PointSet, part: Partition, vg: VisibilityGraph):
    """Lexicographically first switchable path of length 3, or None.
    Exhaustive over vertex 4-tuples connected in the visibility graph."""
    for v1 in sorted(vg.adj):
        for v2 in vg.adj[v1]:
            for v3 in vg.adj[v2]:
                if v3 == v1:
                    continue
                for v4 in vg.adj[v3]:
                    if v4 == v2 or v4 == v1:
                        continue
                    if is_switchable(ps, part, vg, (v1, v2, v3, v4)):
                        return SwitchablePath((v1, v2, v3, v4))
    return None
