"""Instance files and result documents.

Instance format: an optional run of '#' comment lines anywhere, a header
line with the point count, then one "x y" line per point (signed decimal
integers, UTF-8, LF). Result documents are JSON with stable keys: points,
paths, witness, case_tag, verified, violations. Verification verdicts are
recomputed at serialization time, never cached.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .geom import PointSet
from .paths import PathSeq, verify_paths


def parse_instance(text: str) -> list:
    """[(x, y), ...] from instance text; raises ParseError with the
    offending line number."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError(1, "empty instance file")
    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(lineno, f"expected a point count, got {head!r}") from None
    if n < 0:
        raise ParseError(lineno, "negative point count")
    if len(rows) - 1 != n:
        raise ParseError(
            rows[-1][0], f"expected {n} coordinate lines, found {len(rows) - 1}"
        )
    pts = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'x y', got {line!r}")
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(lineno, f"coordinates must be integers, got {line!r}") from None
    return pts


def format_instance(points) -> str:
    if isinstance(points, PointSet):
        points = points.pts
    lines = [str(len(points))]
    lines.extend(f"{p[0]} {p[1]}" for p in points)
    return "\n".join(lines) + "\n"


def witness_summary(w) -> dict:
    from .threepaths import (
        CrossingPairWitness,
        OracleFallback,
        SwitchableBridgedWitness,
        WheelWitness,
    )

    if w is None:
        return {"kind": "none"}
    if isinstance(w, CrossingPairWitness):
        return {
            "kind": "crossing-pair",
            "s1": list(w.partition.s1),
            "s2": list(w.partition.s2),
            "edge1": list(w.edge1),
            "edge2": list(w.edge2),
        }
    if isinstance(w, SwitchableBridgedWitness):
        return {
            "kind": "switchable-bridged",
            "s1": list(w.partition.s1),
            "s2": list(w.partition.s2),
            "path": list(w.path.vertices),
            "bridged": w.bridged,
        }
    if isinstance(w, WheelWitness):
        return {"kind": "wheel", "center": w.center, "rim": list(w.rim)}
    if isinstance(w, OracleFallback):
        return {"kind": "oracle", "n": w.n}
    return {"kind": type(w).__name__}


def result_document(ps: PointSet, paths, witness=None, case_tag=None) -> dict:
    violations = verify_paths(ps, paths)
    return {
        "points": [[p.x, p.y] for p in ps.pts],
        "paths": [list(p.vertices) for p in paths],
        "witness": witness_summary(witness),
        "case_tag": case_tag,
        "verified": not violations,
        "violations": violations,
    }


def dumps_result(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def parse_result(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as bad:
        raise ParseError(bad.lineno, f"invalid JSON: {bad.msg}") from None
    if "paths" not in doc:
        raise ParseError(1, "result document has no 'paths' key")
    paths = doc["paths"]
    if not isinstance(paths, list) or not all(
        isinstance(p, list) and all(isinstance(v, int) for v in p) for p in paths
    ):
        raise ParseError(1, "'paths' must be a list of index lists")
    return doc


def paths_from_document(doc: dict):
    return [PathSeq(tuple(p)) for p in doc["paths"]]
