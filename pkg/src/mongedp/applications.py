"""Contiguous-partition problems on a line solved by the Monge engine.

Two reductions share one shape: items laid out in a fixed order (customers
by position, broadcast cells by request probability) are cut into at most D
contiguous groups, and a group's cost depends only on its endpoints through
prefix sums.  Both group costs satisfy the Monge condition, so the layered
engine finds an optimal partition in O(n * D) time and O(n + D) space.

States are prefix boundaries: state i on level d means the first i items
have been covered by the first d groups.  Decoding a boundary sequence back
into explicit groups is shared by both solvers, as is an exhaustive
partition oracle used for testing at small n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate, combinations
from typing import Callable, List, NamedTuple, Tuple, Union

from .dp_solver import solve_construction
from .monge_core import INF, Cost, MongeCostModel

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class LineInstance:
    """Customers on a line awaiting up to D service centers.

    v holds the customer positions, strictly increasing and positive (the
    depot at the origin serves nobody); w holds the positive demand weight
    of each customer.  A group of consecutive customers is served at its
    leftmost member's position, and every customer pays weight times
    distance to its server.
    """

    v: Tuple[Scalar, ...]
    w: Tuple[Scalar, ...]
    D: int
    W: Tuple[Scalar, ...] = field(init=False, repr=False, compare=False)
    WV: Tuple[Scalar, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        v = tuple(self.v)
        w = tuple(self.w)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)
        if not v:
            raise ValueError("at least one customer required")
        if len(w) != len(v):
            raise ValueError("positions and weights must pair up")
        if v[0] <= 0 or any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError("positions must be positive and strictly increasing")
        if any(x <= 0 for x in w):
            raise ValueError("weights must be positive")
        if not 1 <= self.D <= len(v):
            raise ValueError("need 1 <= D <= number of customers")
        # W[k] = weight of the first k customers, WV[k] = their weighted
        # position sum; both 0 at k=0, so any group cost is two differences.
        object.__setattr__(self, "W", tuple(accumulate(w, initial=0)))
        object.__setattr__(
            self, "WV", tuple(accumulate((a * b for a, b in zip(w, v)), initial=0))
        )

    def __len__(self) -> int:
        return len(self.v)


@dataclass(frozen=True)
class PagingInstance:
    """Broadcast cells sorted by popularity, to be sent in up to D rounds.

    p holds the per-cell request probabilities, nonnegative and
    nonincreasing.  A client asking for a cell in round k must receive all
    of rounds 1..k, so a cell's bandwidth price is the total size of every
    round up to and including its own.
    """

    p: Tuple[Scalar, ...]
    D: int
    S: Tuple[Scalar, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = tuple(self.p)
        object.__setattr__(self, "p", p)
        if not p:
            raise ValueError("at least one cell required")
        if any(x < 0 for x in p):
            raise ValueError("probabilities must be nonnegative")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError("probabilities must be nonincreasing")
        if not 1 <= self.D <= len(p):
            raise ValueError("need 1 <= D <= number of cells")
        object.__setattr__(self, "S", tuple(accumulate(p, initial=0)))

    def __len__(self) -> int:
        return len(self.p)


def dmedian_cost(d: int, i: int, j: int, inst: LineInstance) -> Cost:
    """Serve customers j+1..i at the position of customer j+1.

    Each pays weight times distance to that leftmost member, which prefix
    sums turn into two subtractions.  Empty groups (i == j) are free, so a
    solution may use fewer than D centers; j > i never occurs in the DP but
    reports INF for safety.  Level d does not enter the price.
    """
    if j > i:
        return INF
    if j == i:
        return 0
    return (inst.WV[i] - inst.WV[j]) - inst.v[j] * (inst.W[i] - inst.W[j])


def paging_cost(d: int, i: int, j: int, inst: PagingInstance) -> Cost:
    """Send cells j+1..i as round d of the broadcast schedule.

    Everyone requesting one of these cells receives all i cells sent so
    far, weighted by the round's total probability: i * (S[i] - S[j]).
    Rounds are nonempty (j < i) and round d cannot start before cell d,
    hence the j >= d-1 cutoff; outside that window the move is forbidden.
    """
    if d - 1 <= j < i:
        return i * (inst.S[i] - inst.S[j])
    return INF


def dmedian_model(inst: LineInstance) -> MongeCostModel:
    """Layered model over prefix boundaries 0..m; level d places center d."""
    w = inst.W
    wv = inst.WV
    v = inst.v

    def cost(d: int, i: int, j: int) -> Cost:
        if j > i:
            return INF
        if j == i:
            return 0
        return (wv[i] - wv[j]) - v[j] * (w[i] - w[j])

    return MongeCostModel(n=len(inst) + 1, levels=inst.D, cost=cost)


def paging_model(inst: PagingInstance) -> MongeCostModel:
    """Layered model over prefix boundaries 0..n; level d sends round d."""
    s = inst.S

    def cost(d: int, i: int, j: int) -> Cost:
        if d - 1 <= j < i:
            return i * (s[i] - s[j])
        return INF

    def band(d: int, i: int) -> Tuple[int, int]:
        return d - 1, i - 1

    return MongeCostModel(n=len(inst) + 1, levels=inst.D, cost=cost, band=band)


class DMedianSolution(NamedTuple):
    cost: Cost
    groups: Tuple[Tuple[int, int], ...]  # inclusive 0-based customer ranges
    centers: Tuple[Scalar, ...]          # serving position of each group


class PagingSolution(NamedTuple):
    cost: Cost
    rounds: Tuple[Tuple[int, int], ...]  # inclusive 0-based cell ranges


def _decode_groups(bounds: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    # Boundary sequence -> nonempty half-open prefixes as inclusive ranges.
    return tuple((a, b - 1) for a, b in zip(bounds, bounds[1:]) if b > a)


def solve_dmedian(inst: LineInstance) -> DMedianSolution:
    """Optimal placement of at most D centers for customers on a line.

    Always feasible: empty groups cost nothing, so extra centers are simply
    not used.  Each reported group is served at its leftmost customer's
    position; groups are disjoint, contiguous, and cover every customer.
    """
    sol = solve_construction(dmedian_model(inst))
    groups = _decode_groups(tuple(sol.sequence))
    centers = tuple(inst.v[a] for a, _ in groups)
    return DMedianSolution(sol.value, groups, centers)


def solve_paging(inst: PagingInstance) -> PagingSolution:
    """Broadcast schedule of at most D rounds minimizing expected bandwidth.

    Splitting a round never increases the expected bandwidth, so the
    strictly-increasing D-step schedule found here also attains the optimum
    over schedules with fewer rounds.  Cost stays exact (int or Fraction)
    whenever the probabilities are.
    """
    sol = solve_construction(paging_model(inst))
    return PagingSolution(sol.value, _decode_groups(tuple(sol.sequence)))


def brute_force_partition(
    inst: Union[LineInstance, PagingInstance],
    objective: Callable[[int, int], Cost],
) -> Cost:
    """Cheapest contiguous partition into at most inst.D nonempty parts.

    objective(j, i) prices one part covering items j+1..i in prefix
    coordinates; INF marks a forbidden part and poisons its partition.
    Enumerates every cut set explicitly, so it is exponential in len(inst):
    an independent oracle for testing, not a solver.
    """
    n = len(inst)
    if n > 18:
        raise ValueError("exhaustive oracle needs n <= 18")
    best: Cost = INF
    for parts in range(1, min(inst.D, n) + 1):
        for cuts in combinations(range(1, n), parts - 1):
            bounds = (0, *cuts, n)
            total: Cost = 0
            for a, b in zip(bounds, bounds[1:]):
                piece = objective(a, b)
                if piece == INF:
                    total = INF
                    break
                total += piece
            if total < best:
                best = total
    return best
