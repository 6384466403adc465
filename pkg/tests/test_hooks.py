import itertools
import random

import pytest

from coxsort.perm import (
    avoids_231,
    catalan,
    identity,
    iter_perms,
    longest_element,
    stack_census,
    stack_sort,
    standardize,
)
from coxsort.hooks import (
    brute_fertility,
    count_t_stack_sortable,
    enumerate_vhcs,
    fertility,
    is_uniquely_sorted,
    preimages,
    q_composition,
    slmax,
    two_stack_sortable_formula,
)


def test_identity_has_one_empty_configuration():
    for n in (0, 1, 4):
        v = identity(n)
        assert enumerate_vhcs(v) == [()]
        assert fertility(v) == catalan(n)
    assert q_composition(identity(5), ()) == (5,)
    assert q_composition((), ()) == ()


def test_decreasing_has_no_configuration():
    for n in (2, 3, 6):
        assert enumerate_vhcs(longest_element(n)) == []
        assert fertility(longest_element(n)) == 0


def test_single_hook_example():
    cfgs = enumerate_vhcs((2, 1, 3))
    assert cfgs == [(((1, 2), (3, 3)),)]
    assert q_composition((2, 1, 3), cfgs[0]) == (1, 1)
    assert fertility((2, 1, 3)) == 1 == brute_fertility((2, 1, 3))


def test_q_composition_rejects_bad_hooks():
    with pytest.raises(ValueError):
        q_composition((2, 1, 3), ())  # missing hook for the descent
    with pytest.raises(ValueError):
        q_composition((2, 1, 4, 3), (((1, 2), (3, 4)), ((3, 4), (3, 4))))


def test_parts_sum_to_points_minus_hooks():
    for w in iter_perms(6):
        for cfg in enumerate_vhcs(w):
            comp = q_composition(w, cfg)
            assert sum(comp) == 6 - len(cfg)
            assert len(comp) == len(cfg) + 1


@pytest.mark.parametrize("n", list(range(1, 8)))
def test_fertility_formula_matches_exhaustive_count(n):
    census = stack_census(n)
    for w in iter_perms(n):
        assert fertility(w) == census.get(w, 0)


def test_fertility_is_standardization_invariant():
    rng = random.Random(7)
    for _ in range(200):
        vals = tuple(rng.sample(range(-30, 30), rng.randrange(0, 7)))
        assert fertility(vals) == fertility(standardize(vals))


def test_fertility_monotone_along_the_pass():
    for n in range(1, 8):
        census = stack_census(n)
        for w in iter_perms(n):
            assert census.get(w, 0) <= census.get(stack_sort(w), 0)


def test_preimage_lists():
    assert set(preimages((2, 1, 3))) == {(2, 3, 1)}
    assert preimages(()) == [()]
    pre = preimages((4, 2, 1, 3, 5, 6, 7))
    assert (4, 7, 2, 3, 1, 6, 5) in pre
    for u in pre:
        assert stack_sort(u) == (4, 2, 1, 3, 5, 6, 7)
    # arbitrary value sets map through standardization
    assert set(preimages((0, -5, 9))) == {(0, 9, -5)}
    with pytest.raises(ValueError):
        preimages(tuple(range(1, 12)))


def test_uniquely_sorted_examples():
    w = (3, 2, 1, 4, 6, 5, 7)
    assert is_uniquely_sorted(w)
    assert len(enumerate_vhcs(w)) == 1
    assert slmax((1,)) == 1


def test_uniquely_sorted_have_odd_size_and_central_descents():
    from coxsort.perm import descents
    for n in range(1, 8):
        for w in iter_perms(n):
            if fertility(w) == 1:
                assert n % 2 == 1
                assert len(descents(w)) == (n - 1) // 2
                assert len(enumerate_vhcs(w)) == 1


@pytest.mark.slow
def test_no_uniquely_sorted_of_even_size_8():
    for w in iter_perms(8):
        assert fertility(w) != 1


def test_avoiding_uniquely_sorted_counts():
    import math
    for k in (1, 2, 3):
        n = 2 * k + 1
        count = sum(1 for w in iter_perms(n)
                    if avoids_231(w) and fertility(w) == 1)
        assert count == 2 * math.comb(4 * k + 1, k + 1) // ((3 * k + 1) * (3 * k + 2))


def test_two_stack_sortable_counts():
    expected = [1, 2, 6, 22, 91, 408]
    for n, val in enumerate(expected, start=1):
        assert two_stack_sortable_formula(n) == val
        assert count_t_stack_sortable(n, 2) == val


def test_fertility_sums_to_group_size():
    for n in (1, 2, 3, 4, 5):
        assert sum(fertility(w) for w in iter_perms(n)) == \
            sum(1 for _ in iter_perms(n))
