import math

import pytest

from coxsort.perm import descents, identity, iter_perms
from coxsort.signed import (
    census_rows,
    check_signed,
    descents_b,
    from_signed_window,
    is_centrally_symmetric,
    iter_hyperoctahedral,
    not_sorted_after,
    orbit_b,
    preimage_census,
    stack_b,
    to_signed_window,
)

FIG_W = (3, 1, 5, 2, 7, 4, 8, 6)
FIG_V = (1, 3, 2, 5, 4, 7, 6, 8)


def test_central_symmetry_check():
    assert is_centrally_symmetric(identity(6))
    assert not is_centrally_symmetric((2, 1, 3, 4))
    with pytest.raises(ValueError):
        check_signed((2, 1, 3, 4))
    with pytest.raises(ValueError):
        check_signed((1, 2, 3))  # odd length


def test_signed_window_codec():
    assert from_signed_window((1, 2, 3)) == identity(6)
    assert from_signed_window((-1, 2)) == (1, 3, 2, 4)
    for w in iter_hyperoctahedral(3):
        assert from_signed_window(to_signed_window(w)) == w
    with pytest.raises(ValueError):
        from_signed_window((1, 1))


def test_group_sizes():
    for n in (1, 2, 3, 4):
        group = list(iter_hyperoctahedral(n))
        assert len(group) == 2**n * math.factorial(n)
        assert len(set(group)) == len(group)


def test_stack_b_examples():
    assert stack_b(FIG_W) == FIG_V
    assert stack_b(identity(8)) == identity(8)
    assert stack_b((8, 2, 3, 4, 5, 6, 7, 1)) == (2, 8, 3, 4, 5, 6, 1, 7)


def test_descents_b_example():
    assert descents_b(FIG_V) == {2, 4}
    assert descents_b(identity(10)) == set()


def test_orbit_example():
    orbit = orbit_b((8, 2, 3, 4, 5, 6, 7, 1))
    assert orbit == [
        (8, 2, 3, 4, 5, 6, 7, 1),
        (2, 8, 3, 4, 5, 6, 1, 7),
        (2, 3, 8, 4, 5, 1, 6, 7),
        (2, 3, 4, 8, 1, 5, 6, 7),
        identity(8),
    ]
    assert orbit_b(identity(4)) == [identity(4)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orbit_and_descent_maxima(n):
    assert max(len(orbit_b(w)) for w in iter_hyperoctahedral(n)) == n + 1
    assert max(len(descents_b(stack_b(w)))
               for w in iter_hyperoctahedral(n)) == n // 2


def test_census_partitions_the_group():
    for n in (1, 2, 3):
        census = preimage_census(n)
        assert sum(census.values()) == 2**n * math.factorial(n)
        assert all(is_centrally_symmetric(v) for v in census)


def test_not_sorted_sequence():
    assert [not_sorted_after(n, n - 1) for n in (1, 2, 3, 4)] == [1, 2, 6, 32]


@pytest.mark.slow
def test_not_sorted_sequence_larger():
    assert not_sorted_after(5, 4) == 200
    assert not_sorted_after(6, 5) == 1566


def test_single_preimage_single_descent_example():
    census = preimage_census(4)
    w = (2, 5, 1, 3, 6, 8, 4, 7)
    assert census.get(w) == 1
    assert len(descents_b(w)) == 1


def test_parity_evidence_odd_ranks():
    for n in (1, 3):
        census = preimage_census(n)
        for w in iter_hyperoctahedral(n):
            assert census.get(w, 0) % 2 == 0


def test_embedding_descent_bound():
    for n in (1, 2, 3, 4):
        for v in preimage_census(n):
            assert len(descents(v)) <= 2 * (2 * n - 1) // 3


def test_census_rows_shape():
    rows = census_rows(2)
    assert len(rows) == 8
    assert set(rows[0]) == {"element", "descents", "orbit_size", "preimages"}
    assert sum(r["preimages"] for r in rows) == 8


def test_symmetry_closure_n5():
    for w in iter_hyperoctahedral(5):
        assert is_centrally_symmetric(stack_b(w))
