"""Extended cost arithmetic and Monge-condition checks.

Costs are exact: plain ints or fractions.Fraction for finite values, with
float('inf') as the single unreachable/forbidden sentinel.  Finite arithmetic
never touches floating point, so comparisons are exact; Python integers do not
overflow.  The sentinel only ever participates in comparisons and saturating
addition, both of which are exact for IEEE infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple, Union

INF = float("inf")

Cost = Union[int, Fraction, float]  # float only ever holds INF


def is_finite(x: Cost) -> bool:
    return x != INF


def extended_add(a: Cost, b: Cost) -> Cost:
    """Saturating addition: finite + finite is exact, anything + INF is INF."""
    if a == INF or b == INF:
        return INF
    return a + b


@dataclass(frozen=True)
class ImplicitMatrix:
    """A rows x cols matrix given by an entry function; never materialized.

    entry(i, j) must be pure and cheap (it may be called more than once per
    cell) and must return a Cost for every 0 <= i < rows, 0 <= j < cols.

    band_lo/band_hi, when given (always together), are parallel per-row
    sequences of inclusive column bounds: entry(i, j) is finite exactly for
    band_lo[i] <= j <= band_hi[i], and both endpoint sequences are
    nondecreasing in i.  band_lo[i] > band_hi[i] marks a row with no finite
    entry; columns left of band_lo[i] are exhausted for every later row,
    columns right of band_hi[i] have not become feasible yet.  Matrices whose
    INF cells all lie right of such a staircase (band_hi nondecreasing, every
    finite row stretch starting at column 0) need no band; INF regions on the
    left require one, because entry values alone cannot reveal whether a
    column is dead for good.
    """

    rows: int
    cols: int
    entry: Callable[[int, int], Cost]
    band_lo: Optional[Sequence[int]] = None
    band_hi: Optional[Sequence[int]] = None

    def __post_init__(self) -> None:
        if (self.band_lo is None) != (self.band_hi is None):
            raise ValueError("band_lo and band_hi must be given together")


@dataclass(frozen=True)
class MongeCostModel:
    """A layered DP cost model: levels d = 1..levels over states 0..n-1.

    cost(d, i, j) is the price of reaching state i on level d from state j on
    level d-1.  It must be defined for every 0 <= i, j < n (INF outside the
    model's feasible region) and satisfy the Monge condition on each level.

    band, when given, maps (d, i) to the inclusive range of j with finite
    cost(d, i, j); both endpoints must be nondecreasing in i at fixed d.
    None promises cost(d, i, j) finite for every j <= i.
    """

    n: int
    levels: int
    cost: Callable[[int, int, int], Cost]
    band: Optional[Callable[[int, int], Tuple[int, int]]] = None


def is_monge(m: ImplicitMatrix) -> bool:
    """Check the Monge condition on every adjacent 2x2 quadruple.

    m[i][j] + m[i+1][j+1] <= m[i+1][j] + m[i][j+1], with saturating INF
    arithmetic.  Runs in O(rows * cols) entry evaluations.  Matrices with
    fewer than two rows or columns are vacuously Monge.
    """
    entry = m.entry
    for i in range(m.rows - 1):
        for j in range(m.cols - 1):
            lhs = extended_add(entry(i, j), entry(i + 1, j + 1))
            rhs = extended_add(entry(i + 1, j), entry(i, j + 1))
            if not lhs <= rhs:
                return False
    return True


def is_monge_cost_model(model: MongeCostModel) -> bool:
    """Check the per-level Monge condition of a layered cost model.

    For every level d and every 0 <= j <= i < n-1:
    cost(d,i,j) + cost(d,i+1,j+1) <= cost(d,i+1,j) + cost(d,i,j+1).
    Only the lower triangle j <= i matters; the DP never takes j > i.
    """
    n, cost = model.n, model.cost
    for d in range(1, model.levels + 1):
        for i in range(n - 1):
            for j in range(i + 1):
                lhs = extended_add(cost(d, i, j), cost(d, i + 1, j + 1))
                rhs = extended_add(cost(d, i + 1, j), cost(d, i, j + 1))
                if not lhs <= rhs:
                    return False
    return True
