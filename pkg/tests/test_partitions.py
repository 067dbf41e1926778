from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from corepart.exceptions import BudgetExceededError, InfiniteFamilyError
from corepart.partitions import (
    Partition, anderson_count, armstrong_mean, beta_has_distinct_parts, beta_set,
    enumerate_core, has_distinct_parts, hook_lengths, is_t_core, is_t_core_by_hooks,
    olsson_stanton_max, partition_from_beta, partitions_of, size_from_beta,
)

P6332 = Partition((6, 3, 3, 2))


@st.composite
def partitions(draw, max_size=14):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        x = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(x)
        n -= x
    return Partition(tuple(parts))


def test_hook_lengths_example():
    assert hook_lengths(P6332) == [[9, 8, 6, 3, 2, 1], [5, 4, 2], [4, 3, 1], [2, 1]]
    assert hook_lengths(Partition()) == []
    assert hook_lengths((1,)) == [[1]]


def test_beta_examples():
    assert beta_set(P6332) == {9, 5, 4, 2}
    assert beta_set(()) == frozenset()
    assert beta_set((1,)) == {1}
    assert partition_from_beta({9, 5, 4, 2}) == P6332
    assert partition_from_beta({1}) == Partition((1,))
    assert partition_from_beta({2, 1}) == Partition((1, 1))
    assert size_from_beta({9, 5, 4, 2}) == 14
    assert size_from_beta(set()) == 0
    assert size_from_beta({2, 1}) == 2


def test_invalid_inputs():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((0,))
    with pytest.raises(ValueError):
        partition_from_beta({0, 3})


def test_distinct_parts_examples():
    assert not has_distinct_parts(P6332)
    assert has_distinct_parts((5, 3, 1))
    assert has_distinct_parts(())


def test_core_examples():
    assert is_t_core(P6332, 7) and is_t_core(P6332, 10)
    assert not is_t_core(P6332, 3)


@given(partitions())
def test_beta_round_trip_and_size(p):
    b = beta_set(p)
    assert partition_from_beta(b) == p
    assert size_from_beta(b) == p.size
    assert beta_has_distinct_parts(b) == has_distinct_parts(p)


@given(partitions(), st.integers(1, 9))
def test_abacus_agrees_with_hooks(p, t):
    assert is_t_core(p, t) == is_t_core_by_hooks(p, t)


@given(partitions())
def test_conjugate_involution_and_hooks(p):
    assert p.conjugate().conjugate() == p
    hooks = sorted(h for row in hook_lengths(p) for h in row)
    assert hooks == sorted(h for row in hook_lengths(p.conjugate()) for h in row)
    assert len(hooks) == p.size


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_enumerate_core_examples():
    assert enumerate_core(4, 3, distinct=True) == [Partition(()), Partition((1,)), Partition((2,))]
    c59 = enumerate_core(5, 9, distinct=True)
    assert len(c59) == 16 and sum(p.size for p in c59) == 92
    c34 = enumerate_core(3, 4)
    sizes = [p.size for p in c34]
    assert len(c34) == 5 and max(sizes) == 5 and Fraction(sum(sizes), 5) == 2


def test_enumerate_core_listed_set():
    listed = [(), (1,), (2,), (2, 1), (3,), (4, 1), (3, 2, 1), (5, 2), (5, 2, 1), (6, 3), (4, 3, 2, 1)]
    assert sorted(p.parts for p in enumerate_core(4, 9, distinct=True)) == sorted(listed)


def test_enumerate_core_canonical_order():
    cores = enumerate_core(3, 7)
    assert cores == sorted(cores, key=Partition.sort_key)


@pytest.mark.parametrize("t1,t2", [(2, 3), (3, 4), (3, 5), (4, 5), (3, 7), (5, 6)])
def test_enumerate_core_matches_exhaustive_search(t1, t2):
    bound = olsson_stanton_max(t1, t2)
    exhaustive = sorted((p for n in range(bound + 1) for p in partitions_of(n)
                         if is_t_core_by_hooks(p, t1) and is_t_core_by_hooks(p, t2)),
                        key=Partition.sort_key)
    assert enumerate_core(t1, t2) == exhaustive


@pytest.mark.parametrize("t1,t2", [(3, 4), (4, 5), (3, 7), (5, 7)])
def test_classical_formulas(t1, t2):
    cores = enumerate_core(t1, t2)
    sizes = [p.size for p in cores]
    assert len(cores) == anderson_count(t1, t2)
    assert max(sizes) == olsson_stanton_max(t1, t2)
    assert Fraction(sum(sizes), len(sizes)) == armstrong_mean(t1, t2)


def test_enumerate_core_errors():
    with pytest.raises(InfiniteFamilyError):
        enumerate_core(4, 6)
    with pytest.raises(BudgetExceededError):
        enumerate_core(5, 9, budget=10)
    with pytest.raises(ValueError):
        enumerate_core(0, 3)
