"""Walkthrough: desk-scale exhaustive searches.

Two facts worth seeing with your own eyes: the 6-wheel does not carry
three edge-disjoint plane spanning paths (so the main guarantee cannot
start below seven points), while random sets of 7, 8 and 9 points always
do. The search is exhaustive, so a None answer is a proof of absence, not
a timeout.
"""

from planepaths import SearchConfig, find_k_disjoint_paths, random_points, wheel_points


def main():
    w6 = wheel_points(6, seed=3)
    print("6-wheel, k=3:", find_k_disjoint_paths(w6, SearchConfig(k=3)))
    found = find_k_disjoint_paths(w6, SearchConfig(k=2))
    print("6-wheel, k=2:", [p.vertices for p in found])

    for n in (7, 8, 9):
        hits = 0
        for seed in range(25):
            ps = random_points(n, seed=seed * 17 + n)
            if find_k_disjoint_paths(ps, SearchConfig(k=3)) is not None:
                hits += 1
        print(f"n={n}: 3 disjoint paths found on {hits}/25 random instances")


if __name__ == "__main__":
    main()
