"""Allocation accounting for the solver's auxiliary structures.

The estimator counts list slots (one machine word each) for every row-sized or
column-sized structure the engine and the row-minima machinery create.  It
ignores constant-size bookkeeping and Python object headers on purpose: the
point is to certify the *shape* of memory use (O(n + D) live words, no n x D
table), not byte totals.

Convention: the code that creates a structure logs the allocation, the code
that drops it logs the free.  Result rows returned by row_minima stay charged
until their consumer releases them.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class AllocationMeter:
    live: int = 0
    peak: int = 0
    max_single: int = 0
    allocs: int = 0

    def alloc(self, n: int) -> None:
        self.allocs += 1
        self.live += n
        if self.live > self.peak:
            self.peak = self.live
        if n > self.max_single:
            self.max_single = n

    def free(self, n: int) -> None:
        self.live -= n


_active: AllocationMeter | None = None


def active_meter() -> AllocationMeter | None:
    return _active


def note_alloc(n: int) -> None:
    m = _active
    if m is not None:
        m.alloc(n)


def note_free(n: int) -> None:
    m = _active
    if m is not None:
        m.free(n)


@contextmanager
def measuring():
    """Activate a fresh AllocationMeter for the enclosed block and yield it."""
    global _active
    meter = AllocationMeter()
    prev = _active
    _active = meter
    try:
        yield meter
    finally:
        _active = prev
