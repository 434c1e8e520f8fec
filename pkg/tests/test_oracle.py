import random

import pytest

from planepaths import (
    BudgetExceeded,
    PointSet,
    SearchConfig,
    UnsupportedN,
    convex_points,
    find_k_disjoint_paths,
    max_disjoint_paths,
    random_points,
    verify_paths,
    wheel_points,
)

from util import rand_pointset


def test_wheel6_three_absent_two_found():
    w6 = wheel_points(6, seed=1)
    assert find_k_disjoint_paths(w6, SearchConfig(k=3)) is None
    found = find_k_disjoint_paths(w6, SearchConfig(k=2))
    assert found is not None
    assert verify_paths(w6, found) == []
    assert max_disjoint_paths(w6) == 2


def test_random_eight_has_three():
    ps = random_points(8, seed=21)
    found = find_k_disjoint_paths(ps, SearchConfig(k=3))
    assert found is not None
    assert verify_paths(ps, found) == []


def test_convex_five_max_two():
    ps = convex_points(5, seed=9)
    assert max_disjoint_paths(ps) == 2


def test_found_paths_always_verify():
    rng = random.Random(87)
    for _ in range(20):
        n = rng.randint(5, 8)
        k = rng.randint(1, 3)
        ps = rand_pointset(rng, n)
        found = find_k_disjoint_paths(ps, SearchConfig(k=k))
        if found is not None:
            assert len(found) == k
            assert verify_paths(ps, found) == []


def test_answer_independent_of_labeling():
    rng = random.Random(91)
    for _ in range(10):
        n = rng.randint(5, 7)
        ps = rand_pointset(rng, n)
        base = find_k_disjoint_paths(ps, SearchConfig(k=3)) is not None
        perm = list(range(n))
        rng.shuffle(perm)
        shuffled = PointSet([ps.pts[i] for i in perm])
        assert (find_k_disjoint_paths(shuffled, SearchConfig(k=3)) is not None) == base


def test_pruning_soundness():
    rng = random.Random(93)
    for _ in range(8):
        n = rng.randint(5, 7)
        ps = rand_pointset(rng, n)
        for k in (2, 3):
            fast = find_k_disjoint_paths(ps, SearchConfig(k=k)) is not None
            plain = (
                find_k_disjoint_paths(
                    ps,
                    SearchConfig(k=k, symmetry_reduction=False, degree_pruning=False),
                )
                is not None
            )
            assert fast == plain


def test_budget_exceeded_is_distinct():
    ps = random_points(9, seed=77)
    with pytest.raises(BudgetExceeded):
        find_k_disjoint_paths(ps, SearchConfig(k=3, max_nodes=5))


def test_size_guard():
    ps = random_points(13, seed=5)
    with pytest.raises(UnsupportedN):
        find_k_disjoint_paths(ps, SearchConfig(k=2))
    # enough budget would be needed for a real run; just check the gate opens
    found = find_k_disjoint_paths(ps, SearchConfig(k=1, force_large=True))
    assert found is not None
