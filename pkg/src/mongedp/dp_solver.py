"""Layered DP engine over Monge cost models.

Solves H(0, 0) = 0, H(d, i) = min_{j <= i} H(d-1, j) + cost(d, i, j) for
d = 1..levels.  The value of a single target cell takes O(n * levels) cost
evaluations and O(n + levels) live memory (one row at a time); reconstructing
a full optimal state sequence costs a constant factor more via recursive
midpoint splitting, never materializing the table.  A quadratic-memory
reference implementation (naive_table / naive_solve) is kept for
cross-checking and refuses instances beyond fixed size limits.

Infeasibility is reported, not raised: when no finite-cost assignment exists,
solvers return a DPSolution whose value is INF together with a syntactically
valid state sequence, and callers decide what that means for their domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from .instrument import note_alloc, note_free
from .monge_core import INF, Cost, ImplicitMatrix, MongeCostModel, extended_add
from .smawk import RowMinimaResult, row_minima

NAIVE_CELL_LIMIT = 1 << 22   # max n * (levels + 1) table cells
NAIVE_WORK_LIMIT = 1 << 26   # max n^2 * levels inner iterations


class TableSizeError(ValueError):
    """The quadratic reference solver would exceed its size limits."""


class SupportGapError(ValueError):
    """A DP row was finite on a non-contiguous state set.

    The engine requires every row's feasible states to form an interval,
    which holds whenever the model's finite-cost region is banded with
    nondecreasing endpoints.  A gap means the supplied model breaks that
    contract.
    """


class GridVertex(NamedTuple):
    level: int
    state: int


@dataclass
class DPRow:
    d: int
    values: List[Cost]
    argmin: List[int]  # rightmost optimal predecessor per state, at level d


@dataclass
class DPSolution:
    value: Cost                # INF marks an infeasible instance
    sequence: List[int]        # sequence[d] is the state after level d; [0] == 0


def _level_step(
    model: MongeCostModel,
    d: int,
    prev: List[Cost],
    s_lo: int,
) -> RowMinimaResult:
    """One DP level over states s_lo .. s_lo+m-1, indexed relative to s_lo.

    prev holds the previous level's values on the same state window.  Returns
    row minima of the implicit transition matrix, with exact feasibility
    bands composed from the previous row's support, the j <= i constraint,
    and the model's own cost band.  The minima recursion only ever sees the
    submatrix of rows with a nonempty band and columns in the support, so a
    level costs O(reachable window), not O(m); rows outside report INF with
    the usual last-state argmin.
    """
    m = len(prev)
    first = None
    last = None
    for j in range(m):
        if prev[j] != INF:
            if first is None:
                first = j
            elif last != j - 1:
                raise SupportGapError(
                    f"feasible states at level {d - 1} are not contiguous"
                )
            last = j

    if first is None:
        # nothing reachable: every state at this level is infeasible
        return RowMinimaResult([m - 1] * m, [INF] * m)

    cost = model.cost
    model_band = model.band

    def clamped(i: int):
        bl, bh = model_band(d, s_lo + i)
        lo = bl - s_lo
        if lo < first:
            lo = first
        hi = bh - s_lo
        if hi > last:
            hi = last
        if hi > i:
            hi = i
        return lo, hi

    # trim rows whose composed band is empty; they are INF by construction
    if model_band is None:
        r0, r1 = first, m - 1
    else:
        r0 = 0
        while r0 < m:
            lo, hi = clamped(r0)
            if lo <= hi:
                break
            r0 += 1
        if r0 >= m:
            return RowMinimaResult([m - 1] * m, [INF] * m)
        r1 = m - 1
        while r1 > r0:
            lo, hi = clamped(r1)
            if lo <= hi:
                break
            r1 -= 1

    nrows = r1 - r0 + 1
    ncols = last - first + 1
    off = r0 - first       # relative j > i + off means state_j > state_i
    ci = s_lo + r0         # absolute state of submatrix row 0
    cj = s_lo + first      # absolute state of submatrix column 0

    if model_band is None:
        # prev is finite on the whole window and cost is finite whenever
        # state_j <= state_i, so the INF region is exactly j > i + off: the
        # matrix needs no band, and the hot path needs no finiteness checks
        def entry(
            i: int, j: int, _p=prev, _c=cost, _d=d, _f=first, _o=off, _ci=ci, _cj=cj
        ) -> Cost:
            if j > i + _o:
                return INF
            return _p[_f + j] + _c(_d, _ci + i, _cj + j)

        sub = row_minima(ImplicitMatrix(nrows, ncols, entry), check_band=False)
    else:
        los = []
        his = []
        for i in range(r0, r1 + 1):
            lo, hi = clamped(i)
            los.append(lo - first)
            his.append(hi - first)
        note_alloc(2 * nrows)

        def entry(i: int, j: int) -> Cost:
            v = prev[first + j]
            if v == INF or j > i + off:
                return INF
            c = cost(d, ci + i, cj + j)
            if c == INF:
                return INF
            return v + c

        sub = row_minima(
            ImplicitMatrix(nrows, ncols, entry, band_lo=los, band_hi=his),
            check_band=False,  # monotone by construction from support and band
        )
        note_free(2 * nrows)

    if r0 == 0 and r1 == m - 1 and first == 0 and last == m - 1:
        # full window: the submatrix conventions already match the row's
        return sub

    values: List[Cost] = [INF] * r0 + sub.values + [INF] * (m - r1 - 1)
    argmin = [m - 1] * m
    sv = sub.values
    sa = sub.argmin
    for k in range(nrows):
        if sv[k] != INF:
            argmin[r0 + k] = first + sa[k]
    note_alloc(2 * m)
    note_free(2 * nrows)
    return RowMinimaResult(argmin, values)


def fill_table_value(model: MongeCostModel) -> DPRow:
    """Values and argmins of the final DP level; O(n * levels) time, O(n) space."""
    n, D = model.n, model.levels
    if n <= 0:
        raise ValueError("model must have at least one state")
    if D < 1:
        raise ValueError("model must have at least one level")
    prev: List[Cost] = [INF] * n
    prev[0] = 0
    note_alloc(n)
    res: Optional[RowMinimaResult] = None
    for d in range(1, D + 1):
        nxt = _level_step(model, d, prev, 0)
        note_free(n if res is None else 2 * n)  # previous values (+ argmin)
        prev = nxt.values
        res = nxt
    return DPRow(D, prev, res.argmin)


def _mid_value(
    model: MongeCostModel, u: GridVertex, w: GridVertex
) -> Tuple[GridVertex, Cost]:
    """Midpoint vertex of an optimal u -> w path, plus that path's total cost.

    Runs the sub-DP on the state window [u.state, w.state], carrying for each
    state the state at level floor((u.level + w.level) / 2) of the best path
    reaching it.  An INF cost marks an unreachable pair; the returned vertex
    is then an arbitrary in-window crossing, kept so callers can still emit a
    syntactically valid sequence.
    """
    s_lo = u.state
    m = w.state - s_lo + 1
    span = w.level - u.level
    t_mid = span // 2

    prev: List[Cost] = [INF] * m
    prev[0] = 0
    pred: Optional[List[int]] = None
    note_alloc(m)
    if t_mid == 0:
        pred = list(range(m))
        note_alloc(m)
    for t in range(1, span + 1):
        res = _level_step(model, u.level + t, prev, s_lo)
        note_free(m)
        prev = res.values
        if t == t_mid:
            pred = list(range(m))
            note_alloc(m)
        elif pred is not None:
            arg = res.argmin
            note_alloc(m)
            pred = [pred[k] for k in arg]
            note_free(m)  # the superseded pred row
        note_free(m)  # this level's argmin list is dropped
    value = prev[m - 1]
    crossing = pred[m - 1]
    note_free(2 * m)
    return GridVertex(u.level + t_mid, s_lo + crossing), value


def mid(model: MongeCostModel, u: GridVertex, w: GridVertex) -> GridVertex:
    """The vertex where some optimal u -> w path crosses the middle level.

    The middle level is floor((u.level + w.level) / 2), measured so that a
    span of one returns u itself.  Takes O((w.level - u.level) * width) cost
    evaluations and O(width) live memory, width = w.state - u.state + 1.
    """
    u = GridVertex(*u)
    w = GridVertex(*w)
    _check_window(model, u, w)
    if u.level >= w.level:
        raise ValueError("mid requires u.level < w.level")
    return _mid_value(model, u, w)[0]


def path(model: MongeCostModel, u: GridVertex, w: GridVertex) -> List[GridVertex]:
    """An optimal u -> w path as one vertex per level, endpoints included.

    The edge-cost sum of the result equals the optimal u -> w cost.  If the
    pair is unreachable the sequence is still returned (every u -> w path
    then costs INF); check the cost before trusting it.
    """
    u = GridVertex(*u)
    w = GridVertex(*w)
    _check_window(model, u, w)
    if u.level == w.level:
        if u.state != w.state:
            raise ValueError("equal levels require equal states")
        return [u]
    states = [u.state]
    _path(model, u, w, states)
    return [GridVertex(u.level + t, s) for t, s in enumerate(states)]


def _check_window(model: MongeCostModel, u: GridVertex, w: GridVertex) -> None:
    if not 0 <= u.level <= w.level <= model.levels:
        raise ValueError("levels must satisfy 0 <= u.level <= w.level <= levels")
    if not 0 <= u.state <= w.state < model.n:
        raise ValueError("states must satisfy 0 <= u.state <= w.state < n")


def _path(model: MongeCostModel, u: GridVertex, w: GridVertex, out: List[int]) -> None:
    """Append the optimal states strictly after u up to and including w."""
    span = w.level - u.level
    if span == 0:
        return
    if span == 1:
        out.append(w.state)
        return
    if u.state == w.state:
        # states never decrease, so the path sits still on this whole span
        out.extend([w.state] * span)
        return
    v, _ = _mid_value(model, u, w)
    _path(model, u, v, out)
    _path(model, v, w, out)


def solve_construction(model: MongeCostModel) -> DPSolution:
    """Optimal value and a full optimal state sequence from (0, 0) to (D, n-1).

    O(n * levels) cost evaluations and O(n + levels) live memory.  An
    infeasible instance comes back with value INF and a certificate sequence
    whose edges necessarily sum to INF.
    """
    n, D = model.n, model.levels
    if n <= 0:
        raise ValueError("model must have at least one state")
    if D < 1:
        raise ValueError("model must have at least one level")
    u = GridVertex(0, 0)
    w = GridVertex(D, n - 1)

    if n == 1:
        sequence = [0] * (D + 1)
        value: Cost = 0
        for d in range(1, D + 1):
            value = extended_add(value, model.cost(d, 0, 0))
        return DPSolution(value, sequence)

    # the top-level midpoint pass already sweeps the whole grid, so it hands
    # back the optimal value for free; no separate value fill needed
    v, value = _mid_value(model, u, w)
    sequence = [0]
    note_alloc(D + 1)
    _path(model, u, v, sequence)
    _path(model, v, w, sequence)

    check: Cost = 0
    for d in range(1, D + 1):
        check = extended_add(check, model.cost(d, sequence[d], sequence[d - 1]))
    if check != value:
        raise RuntimeError(
            "internal error: reconstructed path cost does not match the "
            "computed optimum"
        )
    return DPSolution(value, sequence)


def naive_table(model: MongeCostModel) -> List[List[Cost]]:
    """Full (levels+1) x n DP table by direct scanning; reference only.

    Refuses instances whose table or work would exceed fixed limits, so it
    cannot be mistaken for the production path on large inputs.
    """
    n, D = model.n, model.levels
    if D < 1:
        raise ValueError("model must have at least one level")
    if n * (D + 1) > NAIVE_CELL_LIMIT or n * n * D > NAIVE_WORK_LIMIT:
        raise TableSizeError(
            f"reference table of {n * (D + 1)} cells exceeds the size limit; "
            "use fill_table_value or solve_construction"
        )
    cost = model.cost
    H: List[List[Cost]] = [[INF] * n for _ in range(D + 1)]
    H[0][0] = 0
    for d in range(1, D + 1):
        row = H[d]
        prev = H[d - 1]
        for i in range(n):
            best: Cost = INF
            for j in range(i + 1):
                v = prev[j]
                if v == INF:
                    continue
                c = cost(d, i, j)
                if c == INF:
                    continue
                t = v + c
                if t <= best:
                    best = t
            row[i] = best
    return H


def naive_solve(model: MongeCostModel, target: Optional[int] = None) -> DPSolution:
    """Quadratic-memory reference solver with rightmost-predecessor ties.

    target defaults to the last state, matching solve_construction.  An
    infeasible target yields value INF with a placeholder sequence.
    """
    n, D = model.n, model.levels
    if target is None:
        target = n - 1
    if not 0 <= target < n:
        raise ValueError(f"target state {target} out of range [0, {n})")
    H = naive_table(model)
    if H[D][target] == INF:
        return DPSolution(INF, [0] * D + [target])
    sequence = [target]
    cost = model.cost
    i = target
    for d in range(D, 0, -1):
        best_j = None
        best: Cost = INF
        for j in range(i + 1):
            v = H[d - 1][j]
            if v == INF:
                continue
            c = cost(d, i, j)
            if c == INF:
                continue
            t = v + c
            if t <= best:
                best = t
                best_j = j
        assert best_j is not None and best == H[d][i]
        sequence.append(best_j)
        i = best_j
    sequence.reverse()
    return DPSolution(H[D][target], sequence)
