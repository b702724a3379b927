#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Compensated summation for complex lattice sums.

`Accumulator` keeps a running sum as an unevaluated pair (s, t) per real
component, updated by an error-free transformation, so the order of a long
sequential reduction barely matters. Chunks of terms are reduced with
`math.fsum`, which is exactly rounded and therefore order independent.
"""

from __future__ import annotations
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Sequence, Tuple, TypeVar

import numpy as np

T = TypeVar("T")


def two_sum(u: float, v: float) -> Tuple[float, float]:
    """Error-free transformation: u + v == s + t exactly."""
    s = u + v
    up = s - v
    vpp = s - up
    up -= u
    vpp -= v
    return s, -(up + vpp)


class _RealAccumulator:
    __slots__ = ("_s", "_t")

    def __init__(self) -> None:
        self._s = 0.0
        self._t = 0.0

    def add(self, y: float) -> None:
        y, u = two_sum(y, self._t)
        self._s, self._t = two_sum(y, self._s)
        if self._s == 0.0:
            self._s = u
        else:
            self._t += u

    @property
    def value(self) -> float:
        return self._s + self._t


class Accumulator:
    """Running compensated sum of complex numbers."""

    __slots__ = ("_re", "_im", "count")

    def __init__(self) -> None:
        self._re = _RealAccumulator()
        self._im = _RealAccumulator()
        self.count = 0

    def add(self, z: complex) -> None:
        z = complex(z)
        self._re.add(z.real)
        self._im.add(z.imag)
        self.count += 1

    def add_many(self, values: Iterable[complex]) -> None:
        """Add a chunk; the chunk itself is reduced exactly rounded."""
        arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=complex)
        if arr.size == 0:
            return
        self._re.add(math.fsum(arr.real.tolist()))
        self._im.add(math.fsum(arr.imag.tolist()))
        self.count += int(arr.size)

    @property
    def value(self) -> complex:
        return complex(self._re.value, self._im.value)


def exact_sum(values: Sequence[complex]) -> complex:
    """Exactly rounded sum of a complex sequence (independent of order)."""
    acc = Accumulator()
    acc.add_many(values)
    return acc.value


def sharded_sum(evaluate: Callable[[T], np.ndarray], shards: List[T], threads: int = 1) -> complex:
    """
    Evaluate shards (possibly concurrently) and merge them in shard order.

    With threads == 1 the shards are evaluated sequentially. The merge order is
    fixed by the shard list, so the result depends only on how the work was
    sharded, not on scheduling.
    """
    if threads <= 1 or len(shards) <= 1:
        partials = [exact_sum(evaluate(s)) for s in shards]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = [exact_sum(v) for v in pool.map(evaluate, shards)]
    acc = Accumulator()
    for z in partials:
        acc.add(z)
    return acc.value
