"""Command-line frontend.

Subcommands: gen, pack, two, verify, render, oracle. Exit codes: 0 for a
successful (verified or definitive) run, 1 for a failed verification
verdict, 2 for input errors, 3 for internal failures (the instance is
saved to a diagnostics file), 4 for an exhausted oracle budget.
"""

from __future__ import annotations

import argparse
import hashlib
import sys

from .errors import BudgetExceeded, InputError, InternalError, PlanePathsError
from .fileio import (
    dumps_result,
    format_instance,
    parse_instance,
    parse_result,
    paths_from_document,
    result_document,
)
from .generators import convex_points, random_points, wheel_points
from .geom import PointSet
from .oracle import SearchConfig, find_k_disjoint_paths
from .paths import verify_paths
from .svg import render_svg
from .twopaths import two_paths_prescribed
from .threepaths import three_paths


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load_pointset(path):
    return PointSet(parse_instance(_read(path)))


def _save_diagnostic(points):
    text = format_instance(points)
    tag = hashlib.sha256(text.encode()).hexdigest()[:12]
    name = f"planepaths-diagnostic-{tag}.txt"
    with open(name, "w", encoding="utf-8") as fh:
        fh.write(text)
    return name


def cmd_gen(args):
    if args.kind == "random":
        ps = random_points(args.n, args.seed)
    elif args.kind == "convex":
        ps = convex_points(args.n, args.seed)
    else:
        ps = wheel_points(args.n, args.seed)
    _write(args.out, format_instance(ps))
    return 0


def cmd_pack(args):
    ps = _load_pointset(getattr(args, "in"))
    result = three_paths(ps)
    doc = result_document(ps, result.paths, result.witness, result.method)
    _write(args.out, dumps_result(doc))
    if not doc["verified"]:
        raise InternalError(f"result failed verification: {doc['violations']}", ps.pts)
    return 0


def cmd_two(args):
    ps = _load_pointset(getattr(args, "in"))
    result = two_paths_prescribed(ps, args.s, args.t)
    doc = result_document(ps, [result.p, result.q], None, result.case_tag)
    _write(args.out, dumps_result(doc))
    if not doc["verified"]:
        raise InternalError(f"result failed verification: {doc['violations']}", ps.pts)
    return 0


def cmd_verify(args):
    ps = _load_pointset(getattr(args, "in"))
    doc = parse_result(_read(args.paths))
    paths = paths_from_document(doc)
    violations = []
    for p in paths:
        bad = [v for v in p.vertices if not 0 <= v < len(ps)]
        if bad:
            violations.append(f"path uses out-of-range indices {bad}")
    if not violations:
        violations = verify_paths(ps, paths)
    if violations:
        print("FAIL")
        for v in violations:
            print(f"  {v}")
        return 1
    print(f"PASS ({len(paths)} paths, {len(ps)} points)")
    return 0


def cmd_render(args):
    ps = _load_pointset(getattr(args, "in"))
    paths = []
    if args.paths:
        paths = paths_from_document(parse_result(_read(args.paths)))
    _write(args.out, render_svg(ps, paths, show_hull=args.hull))
    return 0


def cmd_oracle(args):
    ps = _load_pointset(getattr(args, "in"))
    cfg = SearchConfig(k=args.k, max_nodes=args.budget, force_large=args.force)
    found = find_k_disjoint_paths(ps, cfg)
    if found is None:
        print(f"ABSENT: no {args.k} edge-disjoint plane spanning paths (definitive)")
        return 0
    doc = result_document(ps, found, None, f"oracle-k{args.k}")
    _write(args.out, dumps_result(doc))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="planepaths",
        description="Edge-disjoint plane spanning paths on planar point sets.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", choices=("random", "convex", "wheel"), default="random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default=None)
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("pack", help="construct three edge-disjoint plane spanning paths")
    p.add_argument("--in", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_pack)

    t = sub.add_parser("two", help="two edge-disjoint paths with prescribed hull starts")
    t.add_argument("--in", required=True)
    t.add_argument("--s", type=int, required=True)
    t.add_argument("--t", type=int, required=True)
    t.add_argument("--out", default=None)
    t.set_defaults(func=cmd_two)

    v = sub.add_parser("verify", help="re-verify a result document independently")
    v.add_argument("--in", required=True)
    v.add_argument("--paths", required=True)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="render an instance and paths to SVG")
    r.add_argument("--in", required=True)
    r.add_argument("--paths", default=None)
    r.add_argument("--out", required=True)
    r.add_argument("--hull", action="store_true")
    r.set_defaults(func=cmd_render)

    o = sub.add_parser("oracle", help="exhaustive search for k edge-disjoint paths")
    o.add_argument("--in", required=True)
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--budget", type=int, default=50_000_000)
    o.add_argument("--force", action="store_true", help="allow more than 12 points")
    o.add_argument("--out", default=None)
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as bad:
        print(f"error: {bad}", file=sys.stderr)
        return 2
    except InputError as bad:
        print(f"error: {bad}", file=sys.stderr)
        return 2
    except BudgetExceeded as bad:
        print(f"budget exceeded: {bad}", file=sys.stderr)
        return 4
    except InternalError as bad:
        name = None
        if bad.points:
            name = _save_diagnostic(bad.points)
        print(f"internal error: {bad}", file=sys.stderr)
        if name:
            print(f"instance saved to {name}", file=sys.stderr)
        return 3
    except PlanePathsError as bad:
        print(f"error: {bad}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
