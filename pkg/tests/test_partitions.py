from math import factorial

import pytest
from hypothesis import given, strategies as st

from loopforest.partitions import (
    Partition,
    centralizer_order,
    conjugate,
    hook_lengths,
    num_standard_tableaux,
    parse_partition,
    parse_skew,
    partitions_of,
)


def test_partition_normalizes():
    assert Partition((1, 3, 0, 2)) == (3, 2, 1)
    assert Partition(()).weight == 0
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_counts():
    assert partitions_of(0) == [()]
    assert [len(partitions_of(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partitions_of(4)[0] == (4,)
    assert partitions_of(4)[-1] == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_reverse_lex_order():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_centralizer_orders():
    assert centralizer_order((1, 1, 1)) == 6
    assert centralizer_order((2, 1)) == 2
    assert centralizer_order((3,)) == 3


@pytest.mark.parametrize("n", range(1, 8))
def test_class_sizes_sum_to_factorial(n):
    assert sum(factorial(n) // centralizer_order(mu) for mu in partitions_of(n)) == factorial(n)


def test_hooks_and_tableaux():
    assert sorted(hook_lengths((2, 2))) == [1, 2, 2, 3]
    assert num_standard_tableaux((2, 2)) == 2
    assert num_standard_tableaux((3, 2, 1)) == 16


@pytest.mark.parametrize("n", range(1, 9))
def test_sum_of_squares_of_dimensions(n):
    assert sum(num_standard_tableaux(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_parsing():
    assert parse_partition("2,2,4") == (4, 2, 2)
    assert parse_partition("(4, 2)") == (4, 2)
    assert parse_partition("") == ()
    assert parse_partition("0") == ()
    assert parse_skew("4,3,2,2/2,2,1") == ((4, 3, 2, 2), (2, 2, 1))
    with pytest.raises(ValueError):
        parse_partition("a,b")


@given(st.lists(st.integers(0, 6), max_size=6))
def test_conjugate_is_involution(parts):
    lam = Partition(parts)
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).weight == lam.weight
