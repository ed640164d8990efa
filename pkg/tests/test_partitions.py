from math import factorial

import pytest

from thagkl.errors import CoefficientOverflowError, InvalidInputError, InvalidPartitionError
from thagkl.partitions import (
    EMPTY,
    Bipartition,
    Partition,
    bipartition_dimension,
    bipartitions_of,
    check_int64,
    conjugate,
    count_standard_tableaux,
    hook_dimension,
    partitions_of,
)


def test_partition_strips_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition((0,)) == EMPTY
    assert Partition((2, 2)).size == 4


@pytest.mark.parametrize("parts", [(1, 2), (2, -1), (3, 0, 1)])
def test_partition_rejects_malformed_parts(parts):
    with pytest.raises(InvalidPartitionError):
        Partition(parts)


def test_invalid_partition_is_a_value_error():
    with pytest.raises(ValueError):
        Partition((1, 3))


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    assert conjugate(()) == EMPTY
    assert Partition((4, 2, 1)).conjugate().conjugate() == (4, 2, 1)


def test_contains():
    assert Partition((3, 2)).contains(Partition((2, 2)))
    assert not Partition((3, 2)).contains(Partition((1, 1, 1)))
    assert Partition((1,)).contains(EMPTY)


@pytest.mark.parametrize("shape,expected", [((2, 1), 2), ((3, 2), 5), ((2, 2), 2), ((3, 2, 1), 16), ((), 1)])
def test_hook_dimension(shape, expected):
    assert hook_dimension(shape) == expected


def test_hook_formula_matches_corner_removal():
    for shape in partitions_of(7):
        assert hook_dimension(shape) == count_standard_tableaux(shape)


def test_dimension_guard():
    with pytest.raises(InvalidInputError):
        hook_dimension((21,))


def test_partitions_of_is_descending():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == [EMPTY]
    assert len(partitions_of(10)) == 42


def test_partitions_of_negative():
    with pytest.raises(InvalidInputError):
        partitions_of(-1)


def test_bipartitions_order_and_count():
    assert list(bipartitions_of(1)) == [Bipartition((1,), ()), Bipartition((), (1,))]
    assert len(list(bipartitions_of(2))) == 5
    shapes = list(bipartitions_of(4))
    assert shapes == sorted(shapes, reverse=True)


class TestBipartitionDimension:
    def test_small_values(self):
        assert bipartition_dimension(Bipartition((1,), (1,))) == 2
        assert bipartition_dimension(Bipartition((2,), (1,))) == 3
        assert bipartition_dimension(Bipartition((), (2, 1))) == 2

    @pytest.mark.parametrize("n", range(1, 6))
    def test_squares_sum_to_group_order(self, n):
        total = sum(bipartition_dimension(b) ** 2 for b in bipartitions_of(n))
        assert total == 2**n * factorial(n)

    def test_bidegree(self):
        assert Bipartition((2, 1), (1,)).bidegree == (3, 1)
        assert Bipartition((2, 1), (1,)).size == 4


def test_check_int64_bounds():
    assert check_int64(2**63 - 1) == 2**63 - 1
    assert check_int64(-(2**63)) == -(2**63)
    with pytest.raises(CoefficientOverflowError):
        check_int64(2**63)
    with pytest.raises(OverflowError):
        check_int64(-(2**63) - 1)


@pytest.mark.parametrize("n", range(11))
def test_conjugate_shapes_have_equal_dimension(n):
    for lam in partitions_of(n):
        assert hook_dimension(lam) == hook_dimension(conjugate(lam))
