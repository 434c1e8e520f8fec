"""Three pairwise edge-disjoint plane spanning paths on any point set of
at least ten points in general position (seven to nine via the exhaustive
search).

The route: a structural search over halving/almost-balancing lines always
yields, for n >= 5, a balanced separated partition whose visibility graph
contains either two crossing edges or a switchable path with a spare
bridged vertex, unless the set is a wheel. Each outcome feeds an assembly
that combines a zig-zag path with two prescribed-start path pairs, one per
side; wheels get their own rotational construction. Every result is
re-verified before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import (
    InternalError,
    InternalPlanarityFailure,
    NotAWheel,
    PreconditionViolated,
    TooFew,
)
from .geom import (
    CCW,
    CW,
    PointSet,
    ccw_neighbor,
    convex_hull,
    cw_neighbor,
    orient,
    segments_cross,
)
from .oracle import SearchConfig, find_k_disjoint_paths
from .partition import (
    Partition,
    SwitchablePath,
    angular_order,
    halving_partner,
    is_halving_pair,
    is_switchable,
    make_partition,
    visibility_graph,
)
from .paths import PathSeq, is_plane, verify_paths, zigzag_path
from .twopaths import two_paths_prescribed


@dataclass(frozen=True)
class CrossingPairWitness:
    partition: Partition
    edge1: Tuple[int, int]  # (s1 endpoint, s2 endpoint)
    edge2: Tuple[int, int]


@dataclass(frozen=True)
class SwitchableBridgedWitness:
    partition: Partition
    path: SwitchablePath
    bridged: int


@dataclass(frozen=True)
class WheelWitness:
    center: int
    rim: Tuple[int, ...]


@dataclass(frozen=True)
class OracleFallback:
    n: int


@dataclass(frozen=True)
class ThreePathResult:
    paths: Tuple[PathSeq, PathSeq, PathSeq]
    witness: object
    method: str


# ---------------------------------------------------------------------------
# wheels


def is_wheel(ps: PointSet) -> Optional[int]:
    """Index of the hub if the set is a wheel configuration: even size,
    exactly one interior point, and every line through the hub and a rim
    point splits the remaining rim evenly. None otherwise."""
    n = len(ps)
    if n < 6 or n % 2 != 0:
        return None
    hull = convex_hull(ps)
    if len(hull) != n - 1:
        return None
    center = (set(range(n)) - set(hull)).pop()
    target = (n - 2) // 2
    for x in hull:
        left = right = 0
        for w in range(n):
            if w == center or w == x:
                continue
            side = ps.orient(center, x, w)
            if side == CCW:
                left += 1
            else:
                right += 1
        if left != target or right != target:
            return None
    return center


def wheel_paths(ps: PointSet, center: int):
    """The n/2 - 1 pairwise edge-disjoint plane spanning paths of a wheel:
    rim zig-zags whose consecutive label sums alternate between two fixed
    values, each rerouted through the hub on its private spoke pair."""
    if is_wheel(ps) != center:
        raise NotAWheel(f"point {center} is not the hub of a wheel configuration")
    n = len(ps)
    m = n - 1
    half = n // 2
    hull = convex_hull(ps)
    k0 = hull.index(min(hull))
    cw = [hull[k0]] + [hull[(k0 - i) % m] for i in range(1, m)]

    def vertex(label):  # labels are 1-based modulo m
        return cw[(label - 1) % m]

    inv2 = pow(2, -1, m)
    out = []
    for k in range(1, half):
        s1 = 2 * k + half - 1
        s2 = 2 * k + half
        start = ((s2 * inv2 - 1) % m) + 1
        labels = [start]
        want = s1
        cur = start
        for _ in range(m - 1):
            cur = ((want - cur - 1) % m) + 1
            labels.append(cur)
            want = s1 + s2 - want
        if len(set(labels)) != m:
            raise InternalError("wheel rim walk revisited a vertex", ps.pts)
        lab_a = ((k - 1) % m) + 1
        lab_b = ((k + half - 2) % m) + 1
        seq = []
        rerouted = False
        for idx, lab in enumerate(labels):
            seq.append(vertex(lab))
            if idx + 1 < len(labels) and {lab, labels[idx + 1]} == {lab_a, lab_b}:
                seq.append(center)
                rerouted = True
        if not rerouted:
            raise InternalError("wheel reroute edge missing from the rim walk", ps.pts)
        out.append(PathSeq(tuple(seq)))
    bad = verify_paths(ps, out)
    if bad:
        raise InternalError(f"wheel paths failed verification: {bad}", ps.pts)
    return out


# ---------------------------------------------------------------------------
# the halving-partner step of the structural search


def _tangent_between(ps, side_x, side_y, sign_x, sign_y):
    # tangent (x, y), x in side_x, y in side_y, with side_x strictly on the
    # sign_x side of the directed line x -> y and side_y on sign_y
    pts = ps.pts
    hx = convex_hull(ps, side_x)
    hy = convex_hull(ps, side_y)
    for x in hx:
        for y in hy:
            px, py = pts[x], pts[y]
            if all(
                orient(px, py, pts[w]) == sign_x for w in side_x if w != x
            ) and all(orient(px, py, pts[w]) == sign_y for w in side_y if w != y):
                return x, y
    raise InternalError("no inner tangent between separated hulls", ps.pts)


def _tangent_from(ps, v, side, sign):
    # tangent point q of `side` seen from v with all of side minus q
    # strictly on the `sign` side of the directed line v -> q
    pts = ps.pts
    pv = pts[v]
    for q in convex_hull(ps, side):
        if all(orient(pv, pts[q], pts[w]) == sign for w in side if w != q):
            return q
    raise InternalError("no tangent from the query point", ps.pts)


def _claim_partner(ps, u, v, a_side, b_side, flip):
    """Second halving segment (p, q) interacting with uv: either it
    crosses uv, or p = v and q is the far tangent point. flip mirrors the
    construction to the other side of uv."""
    pts = ps.pts
    if not flip:
        x, y = _tangent_between(ps, a_side, b_side, CCW, CW)
    else:
        x, y = _tangent_between(ps, b_side, a_side, CW, CCW)
    if segments_cross(pts[u], pts[v], pts[x], pts[y]):
        return x, y, True
    q = _tangent_from(ps, v, b_side if not flip else a_side, CW if not flip else CCW)
    return v, q, False


def claim_halving_partner(ps: PointSet, u: int, v: int):
    """Given a halving segment uv with u extreme: another halving segment
    pq whose ray p -> q escapes to the right of uv, with the double wedge
    of the two lines empty, and either p = v or pq crossing uv."""
    n = len(ps)
    if n % 2 != 0:
        raise PreconditionViolated("halving segments need even cardinality")
    if not is_halving_pair(ps, u, v):
        raise PreconditionViolated("uv is not a halving segment")
    if u not in convex_hull(ps):
        raise PreconditionViolated("u must be extreme")
    pts = ps.pts
    a_side = [i for i in range(n) if i not in (u, v) and ps.orient(u, v, i) == CCW]
    b_side = [i for i in range(n) if i not in (u, v) and ps.orient(u, v, i) == CW]
    p, q, crossed = _claim_partner(ps, u, v, a_side, b_side, flip=False)
    check_partner_conditions(ps, u, v, p, q, expect_right=True)
    return p, q


def check_partner_conditions(ps, u, v, p, q, expect_right=True):
    """Exact re-verification of the three guarantees of the halving
    partner: escape-ray side, empty double wedge, and halving counts."""
    pts = ps.pts
    du = (pts[v][0] - pts[u][0], pts[v][1] - pts[u][1])
    dq = (pts[q][0] - pts[p][0], pts[q][1] - pts[p][1])
    crossdir = du[0] * dq[1] - du[1] * dq[0]
    if expect_right and crossdir >= 0:
        raise InternalError("partner ray does not escape to the right of uv", ps.pts)
    if not expect_right and crossdir <= 0:
        raise InternalError("partner ray does not escape to the left of uv", ps.pts)
    for w in range(len(ps)):
        if w in (u, v, p, q):
            continue
        if ps.orient(u, v, w) != ps.orient(p, q, w):
            raise InternalError("double wedge of the halving pair is not empty", ps.pts)
    if not is_halving_pair(ps, p, q):
        raise InternalError("partner segment is not halving", ps.pts)
    if p != v and not segments_cross(pts[u], pts[v], pts[p], pts[q]):
        raise InternalError("partner neither shares v nor crosses uv", ps.pts)


# ---------------------------------------------------------------------------
# structural search


def structural_search(ps: PointSet):
    """A witness of the structural trichotomy for n >= 5: a partition with
    two crossing visibility edges, or one with a switchable path of length
    3 plus a spare bridged vertex, or the wheel configuration."""
    n = len(ps)
    if n < 5:
        raise TooFew(n, 5)
    if n % 2 == 1:
        return _odd_search(ps)
    return _even_search(ps)


def _checked_crossing(ps, side1, side2, e1, e2):
    part = make_partition(ps, side1, side2)
    w = CrossingPairWitness(part, _norm_edge(part, e1), _norm_edge(part, e2))
    verify_witness(ps, w)
    return w


def _norm_edge(part, e):
    a, b = e
    if a in part.s1:
        return (a, b)
    return (b, a)


def _odd_search(ps):
    n = len(ps)
    u = min(convex_hull(ps))
    order = angular_order(ps, u, range(n))
    b = order[(n - 3) // 2]
    a = order[(n - 1) // 2]
    a_side = []
    b_side = []
    for i in order:
        if i in (a, b):
            continue
        left_a = ps.orient(u, a, i) == CCW
        left_b = ps.orient(u, b, i) == CCW
        if left_a and left_b:
            a_side.append(i)
        elif not left_a and not left_b:
            b_side.append(i)
        else:
            raise InternalError("almost-balancing wedge is not empty", ps.pts)
    if len(a_side) != (n - 3) // 2 or len(b_side) != (n - 3) // 2:
        raise InternalError("almost-balancing split has wrong sizes", ps.pts)
    a1 = [i for i in a_side if ps.orient(a, b, i) == CW]
    b1 = [i for i in b_side if ps.orient(a, b, i) == CW]
    if a1:
        hull_a = convex_hull(ps, a_side + [a])
        a_cw = cw_neighbor(hull_a, a)
        return _checked_crossing(
            ps, a_side + [a], b_side + [b, u], (a, u), (a_cw, b)
        )
    if b1:
        hull_b = convex_hull(ps, b_side + [b])
        b_ccw = ccw_neighbor(hull_b, b)
        return _checked_crossing(
            ps, a_side + [a, u], b_side + [b], (u, b), (a, b_ccw)
        )
    hull_a = convex_hull(ps, a_side + [a])
    a_ccw = ccw_neighbor(hull_a, a)
    hull_b = convex_hull(ps, b_side + [b, u])
    b_cw = cw_neighbor(hull_b, b)
    return _checked_crossing(
        ps, a_side + [a], b_side + [b, u], (a_ccw, b), (a, b_cw)
    )


def _even_search(ps):
    n = len(ps)
    hull = convex_hull(ps)
    u = min(hull)
    seen = set()
    # the advance step is deterministic in u, so the walk either finds a
    # witness or revisits a hull vertex within hull-size rounds; near-wheel
    # instances can genuinely need more than n/2 rounds before a witness
    for _ in range(n + 2):
        if u in seen:
            break
        seen.add(u)
        outcome = _even_round(ps, u)
        if not isinstance(outcome, tuple):
            return outcome
        _, nxt = outcome
        if nxt not in hull:
            raise InternalError("iteration advanced to a non-extreme point", ps.pts)
        u = nxt
    center = is_wheel(ps)
    if center is None:
        raise InternalError(
            "structural search exhausted its rounds on a non-wheel set", ps.pts
        )
    return WheelWitness(center=center, rim=hull)


def _even_round(ps, u):
    n = len(ps)
    pts = ps.pts
    v = halving_partner(ps, u)
    a_side = [i for i in range(n) if i not in (u, v) and ps.orient(u, v, i) == CCW]
    b_side = [i for i in range(n) if i not in (u, v) and ps.orient(u, v, i) == CW]

    p1, q1, crossed = _claim_partner(ps, u, v, a_side, b_side, flip=False)
    if crossed:
        return _checked_crossing(ps, a_side + [v], b_side + [u], (v, u), (p1, q1))
    q = q1
    p2, q2, crossed2 = _claim_partner(ps, u, v, a_side, b_side, flip=True)
    if crossed2:
        return _checked_crossing(ps, a_side + [u], b_side + [v], (u, v), (q2, p2))
    r = q2

    a2 = [w for w in a_side if w != r and ps.orient(q, r, w) == CW]
    b2 = [w for w in b_side if w != q and ps.orient(q, r, w) == CW]
    a2_empty = not a2
    b2_empty = not b2
    if not a2_empty and not b2_empty:
        hull_a = convex_hull(ps, a_side + [u])
        r_ccw = ccw_neighbor(hull_a, r)
        hull_b = convex_hull(ps, b_side + [v])
        q_cw = cw_neighbor(hull_b, q)
        return _checked_crossing(
            ps, a_side + [u], b_side + [v], (r_ccw, q), (r, q_cw)
        )
    if not a2_empty and b2_empty:
        part = make_partition(ps, a_side + [u], b_side + [v])
        hull_a = convex_hull(ps, a_side + [u])
        r_ccw = ccw_neighbor(hull_a, r)
        if r_ccw not in a2:
            raise InternalError("switchable tail is on the wrong side", ps.pts)
        w = SwitchableBridgedWitness(part, SwitchablePath((v, r, q, r_ccw)), u)
        verify_witness(ps, w)
        return w
    if a2_empty and not b2_empty:
        part = make_partition(ps, b_side + [u], a_side + [v])
        hull_b = convex_hull(ps, b_side + [u])
        q_cw = cw_neighbor(hull_b, q)
        if q_cw not in b2:
            raise InternalError("switchable tail is on the wrong side", ps.pts)
        w = SwitchableBridgedWitness(part, SwitchablePath((v, q, r, q_cw)), u)
        verify_witness(ps, w)
        return w
    return ("advance", r)


def verify_witness(ps: PointSet, w) -> None:
    """Check a structural witness against its defining predicates; raises
    InternalError on any discrepancy."""
    if isinstance(w, CrossingPairWitness):
        vg = visibility_graph(ps, w.partition)
        for e in (w.edge1, w.edge2):
            if not vg.has_edge(*e):
                raise InternalError(f"witness edge {e} is not a visibility edge", ps.pts)
        a, b = w.edge1
        c, d = w.edge2
        if not segments_cross(ps.pts[a], ps.pts[b], ps.pts[c], ps.pts[d]):
            raise InternalError("witness edges do not cross", ps.pts)
    elif isinstance(w, SwitchableBridgedWitness):
        vg = visibility_graph(ps, w.partition)
        if not is_switchable(ps, w.partition, vg, w.path.vertices):
            raise InternalError("witness path is not switchable", ps.pts)
        u = w.bridged
        if len(w.partition.s1) < len(w.partition.s2) or u not in w.partition.s1:
            raise InternalError("bridged vertex is not in the big side", ps.pts)
        if u in w.path.vertices:
            raise InternalError("bridged vertex lies on the switchable path", ps.pts)
        if u not in w.partition.bridged_vertices():
            raise InternalError("designated vertex is not bridged", ps.pts)
        if vg.degree(u) < 2:
            raise InternalError("bridged vertex has visibility degree < 2", ps.pts)
    elif isinstance(w, WheelWitness):
        if is_wheel(ps) != w.center:
            raise InternalError("wheel witness does not verify", ps.pts)
    else:
        raise InternalError(f"unknown witness type {type(w).__name__}", ps.pts)


# ---------------------------------------------------------------------------
# assembling three paths from a witness


def three_from_two_free_edges(
    ps: PointSet, part: Partition, z: PathSeq, e1, e2, witness=None, tag="two-free"
) -> ThreePathResult:
    """Combine a zig-zag path with two prescribed-start path pairs, joined
    through two visibility edges unused by the zig-zag."""
    if len(part.s1) + len(part.s2) < 10:
        raise PreconditionViolated("free-edge assembly needs at least 10 points")
    a, b = _norm_edge(part, e1)
    c, d = _norm_edge(part, e2)
    if a == c and b == d:
        raise PreconditionViolated("the two free edges coincide")
    zset = z.edge_set()
    for x, y in ((a, b), (c, d)):
        if (min(x, y), max(x, y)) in zset:
            raise PreconditionViolated("edge is not free with respect to the zig-zag")
    r1 = two_paths_prescribed(ps, a, c, subset=part.s1)
    r2 = two_paths_prescribed(ps, b, d, subset=part.s2)
    p = PathSeq(tuple(reversed(r2.p.vertices)) + r1.p.vertices)
    q = PathSeq(tuple(reversed(r2.q.vertices)) + r1.q.vertices)
    return ThreePathResult((z, p, q), witness, tag)


def three_from_switchable(
    ps: PointSet, part: Partition, z: PathSeq, sp: SwitchablePath, witness=None,
    tag="switchable",
) -> ThreePathResult:
    """Reroute a zig-zag that swallowed all three edges of a switchable
    path: exchange the middle section for the two hull chords, freeing the
    outer edges to anchor the prescribed-start pairs."""
    if len(part.s1) + len(part.s2) < 10:
        raise PreconditionViolated("switchable assembly needs at least 10 points")
    w1, w2, w3, w4 = _locate_subpath(z, sp)
    zi = z.vertices.index(w2) - 1
    zv = list(z.vertices)
    zv[zi + 1], zv[zi + 2] = zv[zi + 2], zv[zi + 1]
    z_new = PathSeq(tuple(zv))
    if not is_plane(ps, z_new):
        raise InternalPlanarityFailure(
            "rerouted zig-zag is not crossing-free", ps.pts
        )
    side_a = part.s1 if w1 in part.s1 else part.s2
    side_b = part.s2 if side_a is part.s1 else part.s1
    r1 = two_paths_prescribed(ps, w1, w3, subset=side_a)
    r2 = two_paths_prescribed(ps, w2, w4, subset=side_b)
    p = PathSeq(tuple(reversed(r1.p.vertices)) + r2.p.vertices)
    q = PathSeq(tuple(reversed(r1.q.vertices)) + r2.q.vertices)
    new_edges = z_new.edge_set()
    for e in ((w1, w2), (w3, w4)):
        if (min(e), max(e)) in new_edges:
            raise InternalError("rerouted zig-zag still uses an anchor edge", ps.pts)
    return ThreePathResult((z_new, p, q), witness, tag)


def _locate_subpath(z, sp):
    # the three switchable edges inside z occupy four consecutive
    # positions; return them in traversal order of z
    want = {frozenset(e) for e in sp.edges()}
    pos = {v: i for i, v in enumerate(z.vertices)}
    idxs = sorted(pos[v] for v in sp.vertices)
    if idxs != list(range(idxs[0], idxs[0] + 4)):
        raise PreconditionViolated("switchable path is not contiguous in the zig-zag")
    window = z.vertices[idxs[0] : idxs[0] + 4]
    have = {frozenset((window[i], window[i + 1])) for i in range(3)}
    if have != want:
        raise PreconditionViolated("zig-zag does not contain the switchable edges")
    return window


def three_from_crossing(
    ps: PointSet, part: Partition, e1=None, e2=None, witness=None
) -> ThreePathResult:
    """Three paths from a partition whose visibility graph has two
    crossing edges: localize the crossing to hull-consecutive endpoints,
    then hand over to the free-edge or switchable assembly."""
    if len(part.s1) + len(part.s2) < 10:
        raise PreconditionViolated("crossing assembly needs at least 10 points")
    vg = visibility_graph(ps, part)
    a, b, c, d = _localize_crossing(ps, vg)
    z = zigzag_path(ps, part)
    zset = z.edge_set()
    four = [(a, b), (a, d), (c, b), (c, d)]
    free = [e for e in four if (min(e), max(e)) not in zset]
    taken = len(four) - len(free)
    if taken == 4:
        raise InternalError("plane zig-zag contains four mutually crossing-incident edges", ps.pts)
    if taken <= 2:
        return three_from_two_free_edges(
            ps, part, z, free[0], free[1], witness, tag="crossing-pair:two-free"
        )
    inz = [e for e in four if (min(e), max(e)) in zset]
    sp = SwitchablePath(_chain_of(inz))
    return three_from_switchable(
        ps, part, z, sp, witness, tag="crossing-pair:switchable"
    )


def _chain_of(edges3):
    # three edges sharing endpoints pairwise form a path on 4 vertices
    from collections import Counter

    cnt = Counter(v for e in edges3 for v in e)
    ends = [v for v, c in cnt.items() if c == 1]
    start = min(ends)
    adj = {}
    for x, y in edges3:
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    seq = [start]
    prev = None
    while len(seq) < 4:
        nxt = [w for w in adj[seq[-1]] if w != prev]
        prev = seq[-1]
        seq.append(nxt[0])
    return tuple(seq)


def _localize_crossing(ps, vg):
    # hull-consecutive quadruple (a, c) x (b, d) inducing four visibility
    # edges with the pair (ad, cb) crossing
    pts = ps.pts
    h1, h2 = vg.hull1, vg.hull2
    m1, m2 = len(h1), len(h2)
    pairs1 = [(h1[i], h1[(i + 1) % m1]) for i in range(m1)] if m1 > 2 else [tuple(h1)]
    pairs2 = [(h2[i], h2[(i + 1) % m2]) for i in range(m2)] if m2 > 2 else [tuple(h2)]
    for a, c in pairs1:
        for b, d in pairs2:
            if not (
                vg.has_edge(a, b)
                and vg.has_edge(a, d)
                and vg.has_edge(c, b)
                and vg.has_edge(c, d)
            ):
                continue
            if segments_cross(pts[a], pts[d], pts[c], pts[b]):
                return a, b, c, d
            if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                return a, d, c, b
    raise InternalError("no hull-consecutive crossing quadruple", ps.pts)


def three_from_switchable_plus_bridge(
    ps: PointSet, part: Partition, sp: SwitchablePath, u: int, witness=None
) -> ThreePathResult:
    """Three paths from a switchable path plus a bridged vertex off it:
    start the zig-zag at the bridged vertex; it either misses a switchable
    edge (two free edges) or contains all three (reroute)."""
    if len(part.s1) + len(part.s2) < 10:
        raise PreconditionViolated("bridged assembly needs at least 10 points")
    if len(part.s1) < len(part.s2) or u not in part.s1:
        raise PreconditionViolated("bridged vertex must lie in the big side")
    if u in sp.vertices:
        raise PreconditionViolated("bridged vertex lies on the switchable path")
    vg = visibility_graph(ps, part)
    if vg.degree(u) < 2:
        raise PreconditionViolated("bridged vertex has visibility degree < 2")
    z = zigzag_path(ps, part, start_side=1, start_vertex=u)
    if z.vertices[0] != u:
        raise InternalError("zig-zag does not start at the bridged vertex", ps.pts)
    zset = z.edge_set()
    missed = [e for e in sp.edges() if (min(e), max(e)) not in zset]
    if missed:
        u_free = [
            (u, w)
            for w in vg.adj.get(u, ())
            if (min(u, w), max(u, w)) not in zset
        ]
        if not u_free:
            raise InternalError("endpoint of the zig-zag lost its free edge", ps.pts)
        return three_from_two_free_edges(
            ps, part, z, missed[0], u_free[0], witness, tag="switch-bridge:two-free"
        )
    return three_from_switchable(
        ps, part, z, sp, witness, tag="switch-bridge:switchable"
    )


# ---------------------------------------------------------------------------
# top level


def three_paths(ps: PointSet) -> ThreePathResult:
    """Three pairwise edge-disjoint plane spanning paths, verified before
    returning. Constructive for n >= 10; exhaustive search for 7..9."""
    n = len(ps)
    if n < 7:
        raise TooFew(n, 7)
    if n < 10:
        found = find_k_disjoint_paths(ps, SearchConfig(k=3))
        if found is None:
            raise InternalError(
                "no three edge-disjoint plane spanning paths on a small set; "
                "this contradicts the small-set guarantee",
                ps.pts,
            )
        result = ThreePathResult(tuple(found), OracleFallback(n), "oracle")
    else:
        w = structural_search(ps)
        if isinstance(w, CrossingPairWitness):
            result = three_from_crossing(ps, w.partition, w.edge1, w.edge2, w)
        elif isinstance(w, SwitchableBridgedWitness):
            result = three_from_switchable_plus_bridge(
                ps, w.partition, w.path, w.bridged, w
            )
        else:
            paths = wheel_paths(ps, w.center)[:3]
            result = ThreePathResult(tuple(paths), w, "wheel")
    bad = verify_paths(ps, result.paths)
    if len(result.paths) != 3:
        bad.append(f"expected 3 paths, got {len(result.paths)}")
    if bad:
        raise InternalError(f"three-path result failed verification: {bad}", ps.pts)
    return result
