"""Walkthrough: two edge-disjoint plane spanning paths whose starting
points are prescribed hull vertices, including the coincident case.

For a 12-point instance, every unordered pair of hull vertices (s, t) is
tried. Each result is checked for: correct starts, crossing-freeness,
spanning, edge-disjointness, and absence of the segment st itself.
"""

from planepaths import convex_hull, random_points, two_paths_prescribed, verify_paths


def main():
    ps = random_points(12, seed=512)
    hull = convex_hull(ps)
    print(f"{len(ps)} points, hull vertices: {list(hull)}")

    tags = {}
    for i, s in enumerate(hull):
        for t in hull[i:]:
            r = two_paths_prescribed(ps, s, t)
            tags[r.case_tag] = tags.get(r.case_tag, 0) + 1
            assert r.p.vertices[0] == s and r.q.vertices[0] == t
            assert verify_paths(ps, [r.p, r.q]) == []
            if s != t:
                assert (min(s, t), max(s, t)) not in r.p.edge_set() | r.q.edge_set()

    print("all hull pairs constructed and verified; cases hit:")
    for tag, count in sorted(tags.items()):
        print(f"  {tag}: {count}")

    s = t = hull[0]
    r = two_paths_prescribed(ps, s, t)
    print(f"coincident starts at {s}: paths open with edges "
          f"{r.p.vertices[:2]} and {r.q.vertices[:2]}")


if __name__ == "__main__":
    main()
