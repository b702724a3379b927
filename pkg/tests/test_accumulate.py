"""Tests for compensated and sharded summation."""

import itertools

import numpy as np

from besselsum.core.accumulate import Accumulator, exact_sum, sharded_sum, two_sum


def test_two_sum_is_error_free():
    s, t = two_sum(1e16, 1.0)
    assert s == 1e16
    assert t == 1.0


def test_exact_sum_is_order_independent():
    values = [1e16, 1.0 + 2j, -1e16, 3.0 - 1e16j, 1e16j]
    results = {exact_sum(list(p)) for p in itertools.permutations(values)}
    assert results == {4.0 + 2j}


def test_running_accumulator_keeps_small_terms():
    acc = Accumulator()
    for v in (1e16, 1.0, -1e16):
        acc.add(v)
    assert acc.value == 1.0
    assert acc.count == 3


def test_add_many_empty_chunk():
    acc = Accumulator()
    acc.add_many([])
    assert acc.value == 0
    assert acc.count == 0


def test_sharded_sum_does_not_depend_on_threads():
    data = np.exp(1j * np.linspace(0, 40, 10000)) * np.linspace(1, 1e6, 10000)
    shards = [slice(i, i + 997) for i in range(0, data.size, 997)]
    one = sharded_sum(lambda sl: data[sl], shards, threads=1)
    four = sharded_sum(lambda sl: data[sl], shards, threads=4)
    assert one == four
