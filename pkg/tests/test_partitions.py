import pytest

from grothcrystal.errors import OutOfBoxError, ParameterError
from grothcrystal.partitions import (
    admissible,
    all_diagonal_slices,
    assemble_from_slices,
    check_partition,
    check_plane_partition,
    complement,
    count_boxed,
    diagonal_slice,
    enumerate_boxed,
    interlaces,
    interlacing_below,
    occupation_from_partition,
    part,
    partition_from_occupation,
    partition_from_positions,
    partitions_in_box,
    partitions_of_size,
    plane_partitions_of_size,
    positions_from_partition,
    pp_entry,
    pp_size,
    reversed_positions,
)


def test_check_partition():
    assert check_partition([3, 1, 0]) == (3, 1, 0)
    with pytest.raises(ParameterError):
        check_partition([1, 2])
    with pytest.raises(ParameterError):
        check_partition([2, -1])


def test_part_is_one_based_and_padded():
    lam = (4, 2, 1)
    assert part(lam, 1) == 4
    assert part(lam, 3) == 1
    assert part(lam, 4) == 0
    assert part(lam, 99) == 0


def test_positions_from_partition():
    assert positions_from_partition((4, 3, 1, 1), 8) == (2, 3, 6, 8)
    assert positions_from_partition((), 5) == ()
    with pytest.raises(OutOfBoxError):
        positions_from_partition((5,), 4)
    with pytest.raises(OutOfBoxError):
        positions_from_partition((1, 1, 1), 2)


def test_positions_roundtrip():
    for m in range(1, 7):
        for n in range(m + 1):
            for lam in partitions_in_box(m - n, n):
                x = positions_from_partition(lam, m)
                assert partition_from_positions(x) == lam


def test_reversed_positions_is_complement():
    # rotating the chain by half a turn complements the partition in its box
    m = 7
    for n in range(m + 1):
        for lam in partitions_in_box(m - n, n):
            x = positions_from_partition(lam, m)
            rot = partition_from_positions(reversed_positions(x, m))
            assert rot == complement(lam, m - n)


def test_complement():
    assert complement((4, 3, 1, 1), 4) == (3, 3, 1, 0)
    assert complement((), 3) == ()
    for lam in partitions_in_box(3, 4):
        assert complement(complement(lam, 3), 3) == lam
    with pytest.raises(OutOfBoxError):
        complement((5, 1), 4)


def test_occupation_encoding():
    lam = (6, 5, 5, 5, 2, 2, 0)
    occ = occupation_from_partition(lam, 8)
    assert occ == (1, 0, 2, 0, 0, 3, 1, 0)
    assert partition_from_occupation(occ) == lam
    with pytest.raises(OutOfBoxError):
        occupation_from_partition((4,), 4)


def test_interlaces_examples():
    assert interlaces((3, 1), (2,))
    assert interlaces((3, 1), (1,))
    assert interlaces((3, 1), (3,))
    assert not interlaces((2, 2), (1,))
    assert interlaces((2,), ())
    assert not interlaces((1, 1), ())


def test_interlacing_below_matches_filter():
    for mu in partitions_in_box(3, 3):
        below = set(interlacing_below(mu))
        brute = {
            lam for lam in partitions_in_box(3, 2) if interlaces(mu, lam)
        }
        assert below == brute


def test_admissible_matches_interlacing():
    # occupation admissibility is interlacing of the encoded partitions
    for m in range(2, 6):
        for n in range(0, 3):
            uppers = [
                occupation_from_partition(mu, m)
                for mu in partitions_in_box(m - 1, n + 1)
            ]
            lowers = [
                occupation_from_partition(lam, m)
                for lam in partitions_in_box(m - 1, n)
            ]
            for up in uppers:
                for lo in lowers:
                    mu = partition_from_occupation(up)
                    lam = partition_from_occupation(lo)
                    assert admissible(up, lo) == interlaces(mu, lam)


def test_admissible_rejects_bad_particle_numbers():
    with pytest.raises(ParameterError):
        admissible((1, 0), (1, 0))
    with pytest.raises(ParameterError):
        admissible((1, 0), (1, 0, 0))


def test_partitions_in_box_inventory():
    box22 = list(partitions_in_box(2, 2))
    assert len(box22) == 6
    assert box22[0] == (0, 0) and box22[-1] == (2, 2)
    assert all(len(lam) == 2 for lam in box22)
    assert len(list(partitions_in_box(3, 3))) == 20


def test_partitions_of_size_counts():
    counts = [sum(1 for _ in partitions_of_size(n)) for n in range(7)]
    assert counts == [1, 1, 2, 3, 5, 7, 11]
    assert list(partitions_of_size(0)) == [()]


def test_plane_partition_slices():
    pi = ((3, 2), (2, 1))
    assert pp_entry(pi, 1, 1) == 3
    assert pp_entry(pi, 2, 2) == 1
    assert pp_entry(pi, 3, 1) == 0
    assert pp_size(pi) == 8
    assert diagonal_slice(pi, 0) == (3, 1)
    assert diagonal_slice(pi, 1) == (2,)
    assert diagonal_slice(pi, -1) == (2,)
    assert all_diagonal_slices(pi) == {-1: (2,), 0: (3, 1), 1: (2,)}


def test_assemble_roundtrip():
    for pi in enumerate_boxed(2, 2, 3):
        slices = all_diagonal_slices(pi)
        if not slices:
            assert pi == ()
            continue
        lo, hi = min(slices), max(slices)
        ordered = [slices.get(m, ()) for m in range(lo, hi + 1)]
        assert assemble_from_slices(ordered, lo) == pi


def test_assemble_rejects_inconsistent_slices():
    with pytest.raises(ParameterError):
        assemble_from_slices([(1,), (2,)], 0)  # row would increase
    with pytest.raises(ParameterError):
        assemble_from_slices([(2,), (1, 2)], -1)  # slice is not a partition


def test_check_plane_partition():
    check_plane_partition(((3, 2), (2, 1)))
    with pytest.raises(ParameterError):
        check_plane_partition(((1, 2),))
    with pytest.raises(ParameterError):
        check_plane_partition(((1,), (2,)))


def test_boxed_counts():
    assert count_boxed(2, 2, 2) == 20
    assert sum(1 for _ in enumerate_boxed(2, 2, 2)) == 20
    assert count_boxed(3, 3, 3) == 980
    # the count is symmetric in all three box dimensions
    assert count_boxed(2, 3, 4) == count_boxed(4, 3, 2) == count_boxed(3, 2, 4)
    for pi in enumerate_boxed(2, 3, 2):
        check_plane_partition(pi)
        assert len(pi) <= 2 and all(len(row) <= 3 for row in pi)
        assert all(row[0] <= 2 for row in pi)


def test_plane_partitions_of_size_counts():
    counts = [sum(1 for _ in plane_partitions_of_size(n)) for n in range(6)]
    assert counts == [1, 1, 3, 6, 13, 24]
