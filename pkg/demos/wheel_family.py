"""Walkthrough: the wheel configurations and their exact path counts.

A wheel is a convex rim around one hub placed so that every hub-rim line
splits the remaining rim evenly. Wheels are the unique obstruction to the
crossing/switchable structure, and they carry exactly n/2 - 1 edge-disjoint
plane spanning paths: the construction below builds them, and the
exhaustive search confirms the count is maximal for the small ones.
"""

import os

from planepaths import is_wheel, max_disjoint_paths, wheel_paths, wheel_points
from planepaths.svg import render_svg

OUT = os.path.join(os.path.dirname(__file__), "out")


def main():
    os.makedirs(OUT, exist_ok=True)
    for n in (6, 8, 10, 12):
        ps = wheel_points(n, seed=77)
        hub = is_wheel(ps)
        paths = wheel_paths(ps, hub)
        print(f"wheel n={n}: hub index {hub}, {len(paths)} = n/2 - 1 disjoint paths")
    for n in (6, 8):
        ps = wheel_points(n, seed=77)
        print(f"  exhaustive maximum for n={n}: {max_disjoint_paths(ps)}")

    ps = wheel_points(8, seed=77)
    with open(os.path.join(OUT, "wheel8.svg"), "w") as fh:
        fh.write(render_svg(ps, wheel_paths(ps, is_wheel(ps)), show_hull=True))
    print(f"figure written to {OUT}/wheel8.svg")


if __name__ == "__main__":
    main()
