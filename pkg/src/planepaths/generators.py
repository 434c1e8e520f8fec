"""Seeded instance generators: uniform random general-position sets,
convex position, and wheel configurations.

Floating point appears only while proposing integer coordinates; every
acceptance decision (general position, convexity, wheel balance) is made
by the exact validators.
"""

from __future__ import annotations

import math
import random

from .errors import CollinearTriple, UnsupportedN
from .geom import PointSet, convex_hull

SPAN = 10 ** 6


def random_points(n: int, seed: int) -> PointSet:
    """n integer points drawn uniformly from the +-10^6 square, redrawing
    until the set is in general position. Deterministic per seed."""
    if n < 1:
        raise UnsupportedN("need at least 1 point")
    rng = random.Random(seed)
    occupied = set()
    pts = []
    while len(pts) < n:
        cand = (rng.randint(-SPAN, SPAN), rng.randint(-SPAN, SPAN))
        if cand in occupied:
            continue
        occupied.add(cand)
        pts.append(cand)
    while True:
        try:
            return PointSet(pts)
        except CollinearTriple as bad:
            i = bad.indices[2]
            occupied.discard(pts[i])
            while True:
                cand = (rng.randint(-SPAN, SPAN), rng.randint(-SPAN, SPAN))
                if cand not in occupied:
                    break
            pts[i] = cand
            occupied.add(cand)


def convex_points(n: int, seed: int) -> PointSet:
    """n points in strictly convex position on a large integer grid."""
    if n < 3:
        raise UnsupportedN("convex position needs at least 3 points")
    rng = random.Random(seed)
    radius = 9 * 10 ** 5
    while True:
        phase = rng.random() * 2 * math.pi
        angles = sorted(
            2 * math.pi * (i + 0.2 + 0.6 * rng.random()) / n for i in range(n)
        )
        pts = [
            (round(radius * math.cos(a + phase)), round(radius * math.sin(a + phase)))
            for a in angles
        ]
        try:
            ps = PointSet(pts)
        except Exception:
            radius -= 17
            continue
        if len(convex_hull(ps)) == n:
            return ps
        radius -= 17


def wheel_points(n: int, seed: int) -> PointSet:
    """Wheel configuration: n-1 points in convex position around one
    interior point such that every line through the interior point and a
    rim point splits the others evenly. Verified exactly before returning."""
    from .threepaths import is_wheel

    if n < 6 or n % 2 != 0:
        raise UnsupportedN("wheel configurations need even n >= 6")
    rng = random.Random(seed)
    m = n - 1
    radius = 9 * 10 ** 5
    while True:
        phase = rng.random() * 2 * math.pi
        pts = [
            (
                round(radius * math.cos(2 * math.pi * i / m + phase)),
                round(radius * math.sin(2 * math.pi * i / m + phase)),
            )
            for i in range(m)
        ]
        pts.append((0, 0))
        try:
            ps = PointSet(pts)
        except Exception:
            radius -= 29
            continue
        if is_wheel(ps) == n - 1:
            return ps
        radius -= 29
