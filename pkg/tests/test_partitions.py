from math import factorial

import pytest

from origami.partitions import (
    MAX_PARTITION_SIZE,
    as_partition,
    conjugate,
    dominance_leq,
    double,
    enumerate_partitions,
    hook_product,
    z_of,
)


def partition_count(n, largest=None):
    """Independent counting recurrence: partitions of n with parts <= largest."""
    if largest is None:
        largest = n
    if n == 0:
        return 1
    if n < 0 or largest == 0:
        return 0
    return partition_count(n - largest, largest) + partition_count(n, largest - 1)


def test_enumerate_base_cases():
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(1) == ((1,),)
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_enumerate_13_has_101_partitions():
    assert len(enumerate_partitions(13)) == 101


@pytest.mark.parametrize("n", range(0, 31))
def test_enumeration_count_matches_recurrence(n):
    parts = enumerate_partitions(n)
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    for lam in parts:
        assert sum(lam) == n
        assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def test_enumeration_is_reverse_lexicographic():
    for n in range(1, 12):
        parts = enumerate_partitions(n)
        assert all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


def test_z_of():
    assert z_of(()) == 1
    assert z_of((1, 1, 1)) == 6
    assert z_of((2, 1)) == 2
    assert z_of(double((2, 2))) == 32


@pytest.mark.parametrize("n", range(0, 11))
def test_class_sizes_partition_the_group(n):
    assert sum(factorial(n) // z_of(lam) for lam in enumerate_partitions(n)) == factorial(n)


def test_double():
    assert double(()) == ()
    assert double((2, 1)) == (4, 2)
    assert double((3, 3)) == (6, 6)


def test_conjugate_is_an_involution():
    for n in range(0, 10):
        for lam in enumerate_partitions(n):
            assert conjugate(conjugate(lam)) == lam


def test_dominance_examples():
    assert dominance_leq((2, 2), (3, 1)) is True
    assert dominance_leq((1, 1, 1), (3,)) is True
    assert dominance_leq((2, 2, 2), (3, 1, 1, 1)) is None
    assert dominance_leq((3, 1), (2, 2)) is False
    assert dominance_leq((2,), (1, 1, 1)) is False  # different sizes


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_is_a_partial_order(n):
    parts = enumerate_partitions(n)
    for lam in parts:
        assert dominance_leq(lam, lam) is True
    for lam in parts:
        for mu in parts:
            if lam != mu:
                assert not (dominance_leq(lam, mu) is True and dominance_leq(mu, lam) is True)
    for lam in parts:
        for mu in parts:
            for rho in parts:
                if dominance_leq(lam, mu) is True and dominance_leq(mu, rho) is True:
                    assert dominance_leq(lam, rho) is True


def test_hook_products():
    assert hook_product(()) == 1
    assert hook_product((5,)) == factorial(5)
    assert hook_product((2, 1)) == 3
    assert hook_product((2, 2)) == 12


def test_hook_product_conjugation_invariant():
    for n in range(0, 11):
        for lam in enumerate_partitions(n):
            assert hook_product(lam) == hook_product(conjugate(lam))


@pytest.mark.parametrize("n", range(1, 11))
def test_sum_of_squared_dimensions(n):
    total = sum((factorial(n) // hook_product(lam)) ** 2 for lam in enumerate_partitions(n))
    assert total == factorial(n)


def test_as_partition_validation():
    assert as_partition([3, 1, 1]) == (3, 1, 1)
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_partition([0])
    with pytest.raises(ValueError):
        as_partition([MAX_PARTITION_SIZE, 1])
    with pytest.raises(ValueError):
        enumerate_partitions(MAX_PARTITION_SIZE + 1)


def test_json_round_trip():
    from origami.partitions import partition_from_json, partition_to_json

    for lam in enumerate_partitions(6):
        assert partition_from_json(partition_to_json(lam)) == lam
