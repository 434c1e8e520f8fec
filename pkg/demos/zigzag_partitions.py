"""Walkthrough: balanced separated partitions and their zig-zag paths.

Splitting a point set by a line into nearly equal halves with disjoint
hulls always admits a plane spanning path that alternates sides; its
crossings with the line appear in order along it. This is the first of the
three paths in the packing construction.
"""

from planepaths import is_plane, is_spanning, make_partition, random_points, zigzag_path
from planepaths.partition import crossing_param


def main():
    ps = random_points(16, seed=6161)
    order = sorted(range(16), key=lambda i: ps.pts[i])
    part = make_partition(ps, order[:8], order[8:])
    print(f"sides: {part.s1} | {part.s2}")
    print(f"bridges (left first): {part.bridges}")

    z = zigzag_path(ps, part)
    print("zig-zag:", " ".join(map(str, z.vertices)))
    sides = "".join("L" if v in part.s1 else "R" for v in z.vertices)
    print("side pattern:", sides)
    print("plane:", is_plane(ps, z), " spanning:", is_spanning(ps, range(16), z))

    params = [crossing_param(part.sep_a, part.sep_b, ps.pts[a], ps.pts[b])
              for a, b in z.edges()]
    monotone = all(params[i] < params[i + 1] for i in range(len(params) - 1))
    print("crossings ordered along the line:", monotone)

    # the equal-size split lets the path start on either side
    other = zigzag_path(ps, part, start_side=2)
    print("mirror start:", " ".join(map(str, other.vertices[:4])), "...")


if __name__ == "__main__":
    main()
