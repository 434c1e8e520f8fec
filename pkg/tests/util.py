"""Shared test helpers: random instances and independent reference
implementations used as oracles against the library's fast paths."""

from fractions import Fraction

from planepaths import PlanePathsError, Point, PointSet, convex_hull
from planepaths.geom import orient


def rand_pointset(rng, n, span=1000):
    """Random general-position PointSet with n points."""
    while True:
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-span, span), rng.randint(-span, span)))
        try:
            return PointSet(sorted(pts))
        except PlanePathsError:
            continue


def rand_separated(rng, n1, n2, span=1000):
    """PointSet plus two index groups separated by a vertical gap."""
    while True:
        left = set()
        while len(left) < n1:
            left.add((rng.randint(-2 * span, -span), rng.randint(-span, span)))
        right = set()
        while len(right) < n2:
            right.add((rng.randint(span, 2 * span), rng.randint(-span, span)))
        try:
            ps = PointSet(sorted(left) + sorted(right))
        except PlanePathsError:
            continue
        return ps, tuple(range(n1)), tuple(range(n1, n1 + n2))


def collinear_reference(points):
    """O(n^3) general-position scan; returns a violating triple or None."""
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if points[i] == points[j]:
                return ("dup", i, j)
            for k in range(j + 1, n):
                if orient(Point(*points[i]), Point(*points[j]), Point(*points[k])) == 0:
                    return ("collinear", i, j, k)
    return None


def cross_reference(a, b, c, d):
    """Open-segment intersection decided by exact rational parameters."""
    r = (b[0] - a[0], b[1] - a[1])
    s = (d[0] - c[0], d[1] - c[1])
    den = r[0] * s[1] - r[1] * s[0]
    acx, acy = c[0] - a[0], c[1] - a[1]
    if den == 0:
        if acx * r[1] - acy * r[0] != 0:
            return False  # parallel, different lines
        # collinear: open 1D overlap along the dominant axis
        axis = 0 if r[0] != 0 else 1
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        return max(lo1, lo2) < min(hi1, hi2)
    t = Fraction(acx * s[1] - acy * s[0], den)
    u = Fraction(acx * r[1] - acy * r[0], den)
    return 0 < t < 1 and 0 < u < 1


def hull_contact_interval(ps, p, q, hull):
    """Exact parameter interval of the segment p -> pts[q] lying inside
    the hull (given as ccw indices, size >= 3), by half-plane clipping."""
    pts = ps.pts
    lo, hi = Fraction(0), Fraction(1)
    qq = pts[q]
    dx, dy = qq[0] - p[0], qq[1] - p[1]
    m = len(hull)
    for k in range(m):
        a = pts[hull[k]]
        b = pts[hull[(k + 1) % m]]
        ex, ey = b[0] - a[0], b[1] - a[1]
        # inside the hull: left of every ccw edge; f(t) = c0 + t*c1 >= 0
        c0 = ex * (p[1] - a[1]) - ey * (p[0] - a[0])
        c1 = ex * dy - ey * dx
        if c1 == 0:
            if c0 < 0:
                return None
            continue
        bound = Fraction(-c0, c1)
        if c1 > 0:
            lo = max(lo, bound)
        else:
            hi = min(hi, bound)
        if lo > hi:
            return None
    return lo, hi


def visible_reference(ps, p, subset):
    """Visibility oracle: q is visible from p iff the clipped intersection
    of segment pq with the hull is exactly the endpoint q."""
    hull = convex_hull(ps, subset)
    if len(hull) == 1:
        return set(hull)
    if len(hull) == 2:
        return set(hull)  # general position: both ends of a segment hull
    out = set()
    for q in hull:
        interval = hull_contact_interval(ps, p, q, hull)
        assert interval is not None and interval[1] == 1
        if interval[0] == 1:
            out.add(q)
    return out
