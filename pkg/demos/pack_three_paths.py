"""Walkthrough: three edge-disjoint plane spanning paths on a random set.

Generates a seeded 24-point instance, runs the constructive pipeline,
re-verifies the result with the independent checker, and writes the
instance, the result document and an SVG figure to demos/out/.
"""

import os

from planepaths import random_points, three_paths, verify_paths
from planepaths.fileio import dumps_result, format_instance, result_document
from planepaths.svg import render_svg

OUT = os.path.join(os.path.dirname(__file__), "out")


def main():
    os.makedirs(OUT, exist_ok=True)
    ps = random_points(24, seed=20240)
    print(f"instance: {len(ps)} points, e.g. {ps.pts[0]} ...")

    result = three_paths(ps)
    print(f"construction route: {result.method}")
    for i, p in enumerate(result.paths):
        print(f"  path {i}: {' '.join(map(str, p.vertices))}")

    # the verifier shares only the orientation predicate with the
    # construction, so this is a meaningful independent check
    violations = verify_paths(ps, result.paths)
    print("independent verification:", "ok" if not violations else violations)

    with open(os.path.join(OUT, "pack_instance.txt"), "w") as fh:
        fh.write(format_instance(ps))
    with open(os.path.join(OUT, "pack_result.json"), "w") as fh:
        fh.write(dumps_result(result_document(ps, result.paths, result.witness, result.method)))
    with open(os.path.join(OUT, "pack_figure.svg"), "w") as fh:
        fh.write(render_svg(ps, result.paths, show_hull=True))
    print(f"artifacts written to {OUT}/pack_*")


if __name__ == "__main__":
    main()
