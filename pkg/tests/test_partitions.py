import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqhilb.motivic import MotivicClass
from eqhilb.partitions import (
    Partition,
    box_weights,
    core_and_quotient,
    core_by_rim_hooks,
    core_counting_series,
    enumerate_partitions,
    hook_lengths,
    is_core,
    is_equidistributed,
    iter_partitions,
    partition_count,
)
from eqhilb.series import MotivicSeries

partitions = st.lists(st.integers(1, 8), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))


def _p_by_recurrence(n):
    # p(n) via the "parts at most m" table
    table = [[1] + [0] * n for _ in range(n + 1)]
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            table[m][k] = table[m - 1][k] + (table[m][k - m] if k >= m else 0)
    return table[n][n] if n else 1


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    assert Partition([]).size == 0
    assert str(Partition([3, 1, 1])) == "[3,1,1]"


def test_enumerate_examples():
    assert enumerate_partitions(0) == [Partition()]
    assert [p.parts for p in enumerate_partitions(3)] == [(3,), (2, 1), (1, 1, 1)]
    assert len(enumerate_partitions(25)) == _p_by_recurrence(25) == 1958


@pytest.mark.parametrize("k", range(13))
def test_enumeration_complete_and_ordered(k):
    ps = enumerate_partitions(k)
    assert len(ps) == len(set(ps)) == partition_count(k) == _p_by_recurrence(k)
    assert all(p.size == k for p in ps)
    assert [p.parts for p in ps] == sorted((p.parts for p in ps), reverse=True)


def test_hook_examples():
    assert sorted(hook_lengths(Partition([2, 1]))) == [1, 1, 3]
    assert hook_lengths(Partition([1])) == [1]
    assert sorted(hook_lengths(Partition([3]))) == [1, 2, 3]


def test_box_weight_examples():
    assert box_weights(Partition([2, 1]), 3, 1) == [1, 2, 0]
    assert box_weights(Partition([3]), 3, 1) == [1, 1, 1]
    assert box_weights(Partition(), 4, 3) == [0, 0, 0, 0]


def test_box_weights_use_rows_as_powers_of_y():
    # (1,1,1) holds 1, y, y^2: weights 0, N, 2N
    assert box_weights(Partition([1, 1, 1]), 5, 2) == [1, 0, 1, 0, 1]


def test_equidistribution_examples():
    assert is_equidistributed(Partition([3]), 3, 1)
    assert not is_equidistributed(Partition([2, 1]), 3, 1)
    assert is_equidistributed(Partition(), 3, 1)


def test_core_quotient_examples():
    cq = core_and_quotient(Partition([3]), 3)
    assert cq.core == Partition() and sum(cq.quotient_sizes) == 1
    p = Partition([4, 2, 2, 1])
    cq = core_and_quotient(p, 1)
    assert cq.core == Partition() and cq.quotient == (p,)
    # hooks of (2,1) are 3, 1, 1: nothing to remove, it is its own 2-core
    cq = core_and_quotient(Partition([2, 1]), 2)
    assert cq.core == Partition([2, 1]) and cq.quotient_sizes == (0, 0)
    cq = core_and_quotient(Partition([2, 2]), 2)
    assert cq.core == Partition() and sum(cq.quotient_sizes) == 2


def test_known_quotient():
    # (3,1) has beta numbers {4, 1}: one bead at position 2 on runner 0,
    # one at position 0 on runner 1
    cq = core_and_quotient(Partition([3, 1]), 2)
    assert cq.core == Partition()
    assert cq.quotient == (Partition([2]), Partition())


@given(partitions, st.integers(1, 6))
def test_core_quotient_identities(p, M):
    cq = core_and_quotient(p, M)
    assert len(cq.quotient) == M
    assert p.size == cq.core.size + M * cq.weight
    assert cq.weight == sum(1 for h in hook_lengths(p) if h % M == 0)
    assert is_core(cq.core, M)
    # the core does not depend on how rim hooks are removed
    assert cq.core == core_by_rim_hooks(p, M)


@given(partitions, st.integers(1, 6), st.integers(0, 5))
def test_box_weights_sum(p, M, N):
    assert sum(box_weights(p, M, N)) == p.size
    if is_equidistributed(p, M, N):
        assert p.size % M == 0


@pytest.mark.parametrize("M", [2, 3, 4])
def test_equidistributed_iff_empty_core(M):
    for k in range(17):
        for p in iter_partitions(k):
            assert is_equidistributed(p, M, M - 1) == (core_and_quotient(p, M).core.size == 0), p


def test_core_series_examples():
    assert core_counting_series(1, 10) == MotivicSeries.one(10)
    staircases = {r * (r + 1) // 2 for r in range(6)}
    assert core_counting_series(2, 15).euler() == [int(k in staircases) for k in range(16)]


@pytest.mark.parametrize("M", [2, 3, 4, 5])
def test_core_series_counts_cores(M):
    series = core_counting_series(M, 12)
    for k in range(13):
        assert series[k] == MotivicClass({0: sum(is_core(p, M) for p in iter_partitions(k))})


@pytest.mark.parametrize("M", [1, 2, 3, 4, 5])
def test_partition_generating_function_factors(M):
    order = 15
    gf = MotivicSeries([partition_count(k) for k in range(order + 1)], order)
    factor = MotivicSeries.one(order)
    scaled = gf.substitute_power(M)
    for _ in range(M):
        factor = factor * scaled
    assert gf == core_counting_series(M, order) * factor
