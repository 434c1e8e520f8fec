"""Exhaustive backtracking search for k pairwise edge-disjoint plane
spanning paths on small point sets.

Independent of the constructive machinery: crossing pairs are precomputed
into bitmasks and paths are grown vertex by vertex, so a completed search
tree is a definitive answer. A node budget separates "searched everything,
none exists" from "ran out of budget".
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, UnsupportedN
from .geom import PointSet, segments_cross
from .paths import PathSeq


@dataclass
class SearchConfig:
    k: int
    max_nodes: int = 50_000_000
    symmetry_reduction: bool = True
    degree_pruning: bool = True
    force_large: bool = False


def find_k_disjoint_paths(ps: PointSet, cfg: SearchConfig):
    """k plane spanning paths, pairwise edge-disjoint, or None when the
    exhausted search proves none exist. Raises BudgetExceeded when the
    node budget runs out first."""
    n = len(ps)
    if cfg.k < 1:
        raise UnsupportedN("k must be at least 1")
    if n < 2:
        raise UnsupportedN("need at least 2 points")
    if n > 12 and not cfg.force_large:
        raise UnsupportedN(
            f"{n} points exceeds the desk-scale guard (12); set force_large to override"
        )
    k = cfg.k
    if k * (n - 1) > n * (n - 1) // 2:
        return None  # not enough edges in the complete graph

    pts = ps.pts
    eid = [[0] * n for _ in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            eid[i][j] = eid[j][i] = len(edges)
            edges.append((i, j))
    ecount = len(edges)
    crossmask = [0] * ecount
    for e1 in range(ecount):
        i, j = edges[e1]
        a, b = pts[i], pts[j]
        for e2 in range(e1 + 1, ecount):
            u, v = edges[e2]
            if segments_cross(a, b, pts[u], pts[v]):
                crossmask[e1] |= 1 << e2
                crossmask[e2] |= 1 << e1

    perfect = cfg.degree_pruning and k * (n - 1) == n * (n - 1) // 2
    degree_pruning = cfg.degree_pruning
    symmetry = cfg.symmetry_reduction
    deg_unused = [n - 1] * n
    max_nodes = cfg.max_nodes
    state = {"nodes": 0, "used": 0}
    done: list = []
    full_mask = (1 << n) - 1

    def degree_ok(w, future, visited, frontier):
        d = deg_unused[w]
        need = future
        if not (visited >> w) & 1:
            need += 1
        if d < need:
            return False
        if perfect:
            cap = 2 * future
            if not (visited >> w) & 1:
                cap += 2
            elif w == frontier:
                cap += 1
            if d > cap:
                return False
        return True

    def extend(pi, cur, cur_mask, visited):
        state["nodes"] += 1
        if state["nodes"] > max_nodes:
            raise BudgetExceeded(state["nodes"])
        future = k - pi - 1
        if visited == full_mask:
            if symmetry:
                if cur[0] > cur[-1]:
                    return None
                tup = tuple(cur)
                if done and tup <= done[-1]:
                    return None
            done.append(tuple(cur))
            if pi + 1 == k:
                return [PathSeq(p) for p in done]
            if degree_pruning and any(
                deg_unused[w] < future for w in range(n)
            ):
                done.pop()
                return None
            res = start_path(pi + 1)
            if res is None:
                done.pop()
            return res
        v = cur[-1]
        row = eid[v]
        for w in range(n):
            if (visited >> w) & 1:
                continue
            e = row[w]
            if (state["used"] >> e) & 1:
                continue
            if crossmask[e] & cur_mask:
                continue
            state["used"] |= 1 << e
            deg_unused[v] -= 1
            deg_unused[w] -= 1
            ok = True
            if degree_pruning:
                ok = degree_ok(v, future, visited | (1 << w), w) and degree_ok(
                    w, future, visited | (1 << w), w
                )
            if ok:
                cur.append(w)
                res = extend(pi, cur, cur_mask | (1 << e), visited | (1 << w))
                if res is not None:
                    return res
                cur.pop()
            state["used"] &= ~(1 << e)
            deg_unused[v] += 1
            deg_unused[w] += 1
        return None

    def start_path(pi):
        for v0 in range(n):
            res = extend(pi, [v0], 0, 1 << v0)
            if res is not None:
                return res
        return None

    return start_path(0)


def max_disjoint_paths(ps: PointSet, budget: int = 50_000_000) -> int:
    """Largest k for which k edge-disjoint plane spanning paths exist,
    established by successive definitive searches."""
    n = len(ps)
    best = 0
    for k in range(1, n // 2 + 2):
        cfg = SearchConfig(k=k, max_nodes=budget)
        if find_k_disjoint_paths(ps, cfg) is None:
            return best
        best = k
    return best
