"""Polygonal paths over a point set: representation, concatenation, the
zig-zag construction on a balanced separated partition, and the verifier
predicates (crossing-free, spanning, pairwise edge-disjoint).

The verifier shares nothing with the constructions beyond the orientation
predicate, so a verified output is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import InternalError, InvalidStartSide, PreconditionViolated, SharedVertex
from .geom import PointSet, convex_hull
from .partition import Partition, crossing_param


@dataclass(frozen=True)
class PathSeq:
    """An ordered sequence of point indices; h vertices span h-1 edges."""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionViolated("path repeats a vertex")

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> List[Tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[i + 1]) for i in range(len(v) - 1)]

    def edge_set(self) -> frozenset:
        v = self.vertices
        return frozenset(
            (v[i], v[i + 1]) if v[i] < v[i + 1] else (v[i + 1], v[i])
            for i in range(len(v) - 1)
        )

    def first(self) -> int:
        return self.vertices[0]

    def last(self) -> int:
        return self.vertices[-1]


def path(vertices: Iterable[int]) -> PathSeq:
    return PathSeq(tuple(vertices))


def reverse(p: PathSeq) -> PathSeq:
    return PathSeq(tuple(reversed(p.vertices)))


def concat(p: PathSeq, q: PathSeq) -> PathSeq:
    """Join two vertex-disjoint paths with the edge last(p) -> first(q)."""
    if set(p.vertices) & set(q.vertices):
        raise SharedVertex(f"paths share vertices {set(p.vertices) & set(q.vertices)}")
    return PathSeq(p.vertices + q.vertices)


def is_plane(ps: PointSet, p: PathSeq) -> bool:
    """True iff no two non-adjacent edges cross. Adjacent edges share a
    vertex and cannot overlap under general position."""
    return not plane_violations(ps, p, stop_early=True)


def plane_violations(ps: PointSet, p: PathSeq, stop_early=False) -> list:
    """Crossing pairs of edges, each as ((u1, v1), (u2, v2))."""
    pts = ps.pts
    v = p.vertices
    m = len(v) - 1
    if m <= 1:
        return []
    segs = []
    for i in range(m):
        a = pts[v[i]]
        b = pts[v[i + 1]]
        if a[0] <= b[0]:
            segs.append((a[0], b[0], a, b, i))
        else:
            segs.append((b[0], a[0], a, b, i))
    segs.sort()
    out = []
    for si in range(m):
        minx1, maxx1, a, b, i = segs[si]
        abx = b[0] - a[0]
        aby = b[1] - a[1]
        for sj in range(si + 1, m):
            minx2, maxx2, c, d, j = segs[sj]
            if minx2 > maxx1:
                break
            if abs(i - j) <= 1:
                continue
            # proper crossing test, inlined (general position: no zeros
            # among set points unless truly collinear, caught at input)
            o1 = abx * (c[1] - a[1]) - aby * (c[0] - a[0])
            o2 = abx * (d[1] - a[1]) - aby * (d[0] - a[0])
            if (o1 > 0) == (o2 > 0):
                continue
            cdx = d[0] - c[0]
            cdy = d[1] - c[1]
            o3 = cdx * (a[1] - c[1]) - cdy * (a[0] - c[0])
            o4 = cdx * (b[1] - c[1]) - cdy * (b[0] - c[0])
            if (o3 > 0) == (o4 > 0):
                continue
            ei, ej = sorted((i, j))
            out.append(((v[ei], v[ei + 1]), (v[ej], v[ej + 1])))
            if stop_early:
                return out
    return out


def is_spanning(ps: PointSet, subset, p: PathSeq) -> bool:
    return set(p.vertices) == set(subset) and len(p.vertices) == len(set(subset))


def pairwise_edge_disjoint(paths: Sequence[PathSeq]) -> bool:
    seen = set()
    for p in paths:
        es = p.edge_set()
        if seen & es:
            return False
        seen |= es
    return True


def shared_edges(paths: Sequence[PathSeq]) -> list:
    seen = {}
    out = []
    for k, p in enumerate(paths):
        for e in p.edge_set():
            if e in seen and seen[e] != k:
                out.append((e, seen[e], k))
            else:
                seen[e] = k
    return out


def verify_paths(ps: PointSet, paths: Sequence[PathSeq], subset=None) -> list:
    """Every violation in a family of claimed plane spanning paths:
    crossing edge pairs, missing or repeated vertices, and edges shared
    between paths. Empty list means the family verifies."""
    if subset is None:
        subset = tuple(range(len(ps)))
    want = set(subset)
    out = []
    for k, p in enumerate(paths):
        vs = p.vertices
        if len(set(vs)) != len(vs):
            out.append(f"path {k}: repeated vertex")
        missing = want - set(vs)
        extra = set(vs) - want
        if missing:
            out.append(f"path {k}: missing vertices {sorted(missing)}")
        if extra:
            out.append(f"path {k}: unexpected vertices {sorted(extra)}")
        for e1, e2 in plane_violations(ps, p):
            out.append(f"path {k}: edges {e1} and {e2} cross")
    for e, k1, k2 in shared_edges(paths):
        out.append(f"edge {e} appears in paths {k1} and {k2}")
    return out


def zigzag_path(
    ps: PointSet,
    part: Partition,
    start_side: int = None,
    start_vertex: int = None,
) -> PathSeq:
    """Plane spanning path on the partition's points alternating between
    the classes.

    Starting from one endpoint of the left bridge, the path repeatedly
    moves to the opposite-class endpoint of the left bridge of the points
    not yet visited, so its crossings with the separating line appear in
    order along the line. If the class sizes differ the path must start in
    the bigger class. `start_vertex` may name either bridge endpoint of
    the start side; for the right bridge the construction runs mirrored.
    """
    s1set = frozenset(part.s1)
    s2set = frozenset(part.s2)
    if start_side is None:
        start_side = 1 if len(part.s1) >= len(part.s2) else 2
    big, small = (part.s1, part.s2) if start_side == 1 else (part.s2, part.s1)
    if len(big) < len(small):
        raise InvalidStartSide(
            f"start side has {len(big)} points, the other {len(small)}"
        )

    sep_a, sep_b = part.sep_a, part.sep_b
    if start_vertex is not None:
        startset = s1set if start_side == 1 else s2set
        if start_vertex not in startset:
            raise InvalidStartSide(f"vertex {start_vertex} is not in side {start_side}")
        left, right = part.bridges
        if start_vertex in left:
            pass
        elif start_vertex in right:
            sep_a, sep_b = sep_b, sep_a  # mirror: right bridge becomes left
        else:
            raise PreconditionViolated(f"vertex {start_vertex} is not bridged")

    remaining = set(part.s1) | set(part.s2)
    pts = ps.pts
    seq: List[int] = []
    want_side1 = None  # class of the next vertex; None = take bridge start
    while remaining:
        if len(seq) == len(part.s1) + len(part.s2) - 1:
            seq.append(remaining.pop())
            break
        hull = convex_hull(ps, remaining)
        m = len(hull)
        bridges = []
        for k in range(m):
            i = hull[k]
            j = hull[(k + 1) % m]
            if m == 2 and k == 1:
                break
            if (i in s1set) != (j in s1set):
                bridges.append((i, j) if i in s1set else (j, i))
        if not bridges or len(bridges) > 2:
            raise InternalError("zig-zag lost the bridges", ps.pts)
        bridges.sort(
            key=lambda e: crossing_param(sep_a, sep_b, pts[e[0]], pts[e[1]])
        )
        p1, q1 = bridges[0]
        if want_side1 is None:
            nxt = p1 if start_side == 1 else q1
            if start_vertex is not None and nxt != start_vertex:
                raise InternalError(
                    f"zig-zag was asked to start at {start_vertex} but the left "
                    f"bridge starts at {nxt}",
                    ps.pts,
                )
            want_side1 = nxt not in s1set
        else:
            nxt = p1 if want_side1 else q1
            want_side1 = not want_side1
        seq.append(nxt)
        remaining.remove(nxt)
    return PathSeq(tuple(seq))
