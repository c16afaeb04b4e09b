from math import factorial

import pytest
from hypothesis import given, strategies as st

from src.algebra.partitions import (
    EMPTY,
    Partition,
    augment,
    canonical_key,
    class_size,
    enumerate_partitions,
    partitions_up_to,
    power_type,
    z_of,
)


def test_partitions_of_zero_is_the_empty_partition():
    assert enumerate_partitions(0) == (EMPTY,)


def test_partitions_of_four_in_decreasing_lex_order():
    assert enumerate_partitions(4) == (
        Partition((4,)),
        Partition((3, 1)),
        Partition((2, 2)),
        Partition((2, 1, 1)),
        Partition((1, 1, 1, 1)),
    )


def test_number_of_partitions_of_thirty():
    assert len(enumerate_partitions(30)) == 5604


def test_negative_size_rejected():
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_partition_is_sorted_and_rejects_nonpositive_parts():
    assert Partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_partitions_up_to_follows_canonical_order():
    listed = list(partitions_up_to(5))
    assert listed == sorted(listed, key=canonical_key)
    assert listed[0] == EMPTY
    assert len(listed) == 1 + 1 + 2 + 3 + 5 + 7


@pytest.mark.parametrize("n", range(1, 8))
def test_centralizer_of_identity_is_factorial(n):
    assert z_of(Partition((1,) * n)) == factorial(n)


def test_centralizer_examples():
    assert z_of(Partition((2, 1))) == 2
    assert z_of(Partition((2, 2))) == 8
    assert z_of(EMPTY) == 1


def test_power_type_examples():
    assert power_type(Partition((6,)), 4) == Partition((3, 3))
    assert power_type(Partition((4, 2)), 2) == Partition((2, 2, 1, 1))
    assert power_type(Partition((5, 3)), 1) == Partition((5, 3))
    with pytest.raises(ValueError):
        power_type(Partition((2,)), 0)


def test_augment_examples():
    assert augment(Partition((2, 1)), 2) == Partition((2, 1, 1, 1))
    assert augment(EMPTY, 3) == Partition((1, 1, 1))
    assert augment(Partition((3,)), 0) == Partition((3,))


def test_multiplicities_and_without_ones():
    lam = Partition((3, 1, 1, 2, 1))
    assert lam.multiplicities() == {3: 1, 2: 1, 1: 3}
    assert lam.without_ones(2) == Partition((3, 2, 1))
    with pytest.raises(ValueError):
        Partition((2,)).without_ones(1)


@given(st.integers(min_value=0, max_value=9))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(lam) for lam in enumerate_partitions(n)) == factorial(n)


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=12))
def test_power_type_preserves_size(n, k):
    for lam in enumerate_partitions(n):
        assert power_type(lam, k).size == n


@given(st.lists(st.integers(min_value=1, max_value=6), max_size=6), st.integers(min_value=0, max_value=4))
def test_augment_adds_fixed_points(parts, j):
    lam = Partition(parts)
    out = augment(lam, j)
    assert out.size == lam.size + j
    assert out.multiplicity(1) == lam.multiplicity(1) + j
