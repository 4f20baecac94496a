"""Linear-time row minima of implicit totally monotone matrices (SMAWK).

Ties between finite entries resolve to the rightmost column, and rows without
any finite entry report the last column.  Cells at INF are ordered by their
distance to the row's feasible band when one is supplied (see ImplicitMatrix):
a cell just left of the band sorts below one far right of it, which is exactly
the order induced by completing the matrix with steeply growing finite
penalties.  Under that order the matrix is totally monotone whenever its
finite part is Monge and the bands form a staircase, so the classical
recursion applies unchanged.  Without a band, INF cells compare as
left-biased, which is sound only when every INF lies right of a nondecreasing
per-row frontier (no column is ever exhausted from the left).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from .instrument import note_alloc, note_free
from .monge_core import INF, Cost, ImplicitMatrix


@dataclass
class RowMinimaResult:
    argmin: List[int]
    values: List[Cost]


def brute_force_row_minima(m: ImplicitMatrix) -> RowMinimaResult:
    """Reference oracle: full scan of every row, rightmost ties.

    O(rows * cols) evaluations.  Rows whose entries are all INF report the
    last column, matching row_minima's convention.
    """
    arg: List[int] = []
    val: List[Cost] = []
    entry = m.entry
    for i in range(m.rows):
        best_j = 0
        best = entry(i, 0)
        for j in range(1, m.cols):
            v = entry(i, j)
            if v <= best:
                best_j = j
                best = v
        arg.append(best_j)
        val.append(best)
    return RowMinimaResult(arg, val)


def _dead_win(vc: Cost, c: int, vt: Cost, t: int, lo: int, hi: int) -> bool:
    """Does column c (right) weakly beat column t (left) when INF is involved?

    Finite always beats INF.  Two INF cells compare by band position: both
    left of the band, the right one wins (it stays feasible longer); both
    right of it, the left one wins (it becomes feasible sooner); one on each
    side, the one closer to the band wins, ties to the right.
    """
    if vc != INF:
        return True          # c finite, t INF
    if vt != INF:
        return False         # t finite, c INF
    if c < lo:
        return True          # both left-dead
    if t >= lo:
        return False         # both right-dead
    return c - hi <= lo - t  # t left-dead vs c right-dead


def row_minima(m: ImplicitMatrix, check_band: bool = True) -> RowMinimaResult:
    """Rightmost argmin of every row in O(rows + cols) entry evaluations.

    Requires the matrix to be Monge on its finite part, with its INF pattern
    either banded (band_lo/band_hi given) or confined right of a nondecreasing
    frontier.  Band endpoints must be nondecreasing; check_band=False skips
    that validation for callers whose bands are monotone by construction.
    """
    nr, nc = m.rows, m.cols
    if nr <= 0 or nc <= 0:
        raise ValueError("matrix must have at least one row and one column")

    if m.band_lo is None:
        lo: Sequence[int] = [0] * nr
        hi: Sequence[int] = [nc - 1] * nr
        note_alloc(2 * nr)
    else:
        lo, hi = m.band_lo, m.band_hi
        if len(lo) != nr or len(hi) != nr:
            raise ValueError("band_lo and band_hi must give one bound per row")
        if check_band:
            for i in range(nr - 1):
                if lo[i] > lo[i + 1] or hi[i] > hi[i + 1]:
                    raise ValueError("band endpoints must be nondecreasing")

    out_arg: List[int] = [0] * nr
    out_val: List[Cost] = [INF] * nr
    note_alloc(2 * nr)

    rows = list(range(nr))
    cols = list(range(nc))
    note_alloc(nr + nc)
    _smawk(rows, cols, m.entry, lo, hi, out_arg, out_val)
    note_free(nr + nc)

    last = nc - 1
    for i in range(nr):
        if out_val[i] == INF:
            out_arg[i] = last
    if m.band_lo is None:
        note_free(2 * nr)
    return RowMinimaResult(out_arg, out_val)


def _reduce(
    rows: Sequence[int],
    cols: Sequence[int],
    entry: Callable[[int, int], Cost],
    lo: Sequence[int],
    hi: Sequence[int],
) -> List[int]:
    """Discard columns that are no row's argmin, keeping at most len(rows)."""
    nr = len(rows)
    stack: List[int] = []
    # tval[k] caches entry(rows[k], stack[k]), the value stack[k] is judged by
    # while it is the top; it stays valid for the element's whole residence.
    tval: List[Optional[Cost]] = []
    push_col = stack.append
    push_val = tval.append
    pop_col = stack.pop
    pop_val = tval.pop
    note_alloc(2 * nr)
    h = 0
    for c in cols:
        while h:
            k = h - 1
            r = rows[k]
            vt = tval[k]
            if vt is None:
                vt = entry(r, stack[k])
                tval[k] = vt
            vc = entry(r, c)
            if vc != INF and vt != INF:
                win = vc <= vt
            else:
                win = _dead_win(vc, c, vt, stack[k], lo[r], hi[r])
            if win:
                pop_col()
                pop_val()
                h = k
            else:
                break
        if h < nr:
            push_col(c)
            push_val(None)
            h += 1
    note_free(2 * nr)
    return stack


def _smawk(
    rows: Sequence[int],
    cols: Sequence[int],
    entry: Callable[[int, int], Cost],
    lo: Sequence[int],
    hi: Sequence[int],
    out_arg: List[int],
    out_val: List[Cost],
) -> None:
    if len(rows) == 1:
        r = rows[0]
        l, h = lo[r], hi[r]
        best_j = cols[0]
        best = entry(r, best_j)
        for c in cols[1:]:
            v = entry(r, c)
            if v != INF and best != INF:
                win = v <= best
            else:
                win = _dead_win(v, c, best, best_j, l, h)
            if win:
                best_j = c
                best = v
        out_arg[r] = best_j
        out_val[r] = best
        return

    if len(cols) > len(rows):
        cols = _reduce(rows, cols, entry, lo, hi)

    odd = rows[1::2]
    note_alloc(len(odd))
    _smawk(odd, cols, entry, lo, hi, out_arg, out_val)
    note_free(len(odd))
    _interpolate(rows, cols, entry, lo, hi, out_arg, out_val)


def _interpolate(
    rows: Sequence[int],
    cols: Sequence[int],
    entry: Callable[[int, int], Cost],
    lo: Sequence[int],
    hi: Sequence[int],
    out_arg: List[int],
    out_val: List[Cost],
) -> None:
    """Fill even-index rows by scanning between the odd neighbours' argmins."""
    nc = len(cols)
    nr = len(rows)
    ptr = 0
    for k in range(0, nr, 2):
        r = rows[k]
        if k + 1 < nr:
            target = out_arg[rows[k + 1]]
            end = ptr
            while cols[end] != target:
                end += 1
        else:
            end = nc - 1
        l, h = lo[r], hi[r]
        best_j = cols[ptr]
        best = entry(r, best_j)
        for p in range(ptr + 1, end + 1):
            c = cols[p]
            v = entry(r, c)
            if v != INF and best != INF:
                win = v <= best
            else:
                win = _dead_win(v, c, best, best_j, l, h)
            if win:
                best_j = c
                best = v
        out_arg[r] = best_j
        out_val[r] = best
        ptr = end
