"""The linear-space layered solver against the quadratic reference."""

import random
from itertools import accumulate

import pytest

from mongedp.dp_solver import (
    GridVertex,
    SupportGapError,
    TableSizeError,
    fill_table_value,
    mid,
    naive_solve,
    naive_table,
    path,
    solve_construction,
)
from mongedp.monge_core import INF, MongeCostModel, extended_add


def random_model(rng, max_n=12, max_levels=6):
    """Plain or banded small Monge model; narrow bands may be infeasible."""
    n = rng.randint(1, max_n)
    levels = rng.randint(1, max_levels)
    a = [[rng.randint(0, 9) for _ in range(n)] for _ in range(levels + 1)]
    b = [[rng.randint(0, 9) for _ in range(n)] for _ in range(levels + 1)]
    conv = [
        list(accumulate(accumulate(rng.randint(0, 3) for _ in range(n)), initial=0))
        for _ in range(levels + 1)
    ]
    width = rng.randint(1, n) if rng.random() < 0.5 else None

    def cost(d, i, j):
        if j > i or (width is not None and i - j > width):
            return INF
        return a[d][i] + b[d][j] + conv[d][i - j]

    band = None
    if width is not None:
        def band(d, i):
            lo = i - width
            return (lo if lo > 0 else 0, i)

    return MongeCostModel(n=n, levels=levels, cost=cost, band=band)


def assert_solution_consistent(model, sol):
    seq = sol.sequence
    assert len(seq) == model.levels + 1
    assert seq[0] == 0
    assert seq[-1] == model.n - 1
    assert all(x <= y for x, y in zip(seq, seq[1:]))
    if sol.value != INF:
        total = 0
        for d in range(1, model.levels + 1):
            total = extended_add(total, model.cost(d, seq[d], seq[d - 1]))
        assert total == sol.value


def test_tiny_worked_table():
    # two levels over three states, costs chosen by hand
    c = {
        (1, 0, 0): 1, (1, 1, 0): 4, (1, 1, 1): INF, (1, 2, 0): 9,
        (1, 2, 1): INF, (1, 2, 2): INF,
        (2, 0, 0): 2, (2, 1, 0): 1, (2, 1, 1): 1, (2, 2, 0): 7,
        (2, 2, 1): 3, (2, 2, 2): 5,
    }
    model = MongeCostModel(n=3, levels=2, cost=lambda d, i, j: c[(d, i, j)])
    table = naive_table(model)
    assert table[0] == [0, INF, INF]
    assert table[1] == [1, 4, 9]
    # H(2,2) = min(1+7, 4+3, 9+5) = 7 via j=1
    assert table[2] == [3, 2, 7]
    sol = solve_construction(model)
    assert sol.value == 7
    assert_solution_consistent(model, sol)


def test_equivalence_on_random_models():
    rng = random.Random(321)
    for _ in range(200):
        model = random_model(rng)
        table = naive_table(model)
        want = table[model.levels][model.n - 1]
        assert fill_table_value(model).values[model.n - 1] == want
        assert naive_solve(model).value == want
        sol = solve_construction(model)
        assert sol.value == want
        assert_solution_consistent(model, sol)
        if want != INF:
            # every link is tight against the reference table
            for d in range(1, model.levels + 1):
                step = extended_add(
                    table[d - 1][sol.sequence[d - 1]],
                    model.cost(d, sol.sequence[d], sol.sequence[d - 1]),
                )
                assert table[d][sol.sequence[d]] == step


def test_infeasible_reports_value_not_exception():
    # width-1 band cannot reach state 4 in 2 levels
    def cost(d, i, j):
        if j > i or i - j > 1:
            return INF
        return 1

    model = MongeCostModel(
        n=5, levels=2, cost=cost, band=lambda d, i: (max(0, i - 1), i)
    )
    for solver in (solve_construction, naive_solve):
        sol = solver(model)
        assert sol.value == INF
        assert_solution_consistent(model, sol)


def test_single_state_chain_sums_self_loops():
    model = MongeCostModel(n=1, levels=3, cost=lambda d, i, j: d)
    sol = solve_construction(model)
    assert sol.value == 1 + 2 + 3
    assert sol.sequence == [0, 0, 0, 0]


def test_mid_and_path_contracts():
    rng = random.Random(99)
    for _ in range(60):
        model = random_model(rng, max_n=9, max_levels=5)
        table = naive_table(model)
        sol = solve_construction(model)
        if sol.value == INF:
            continue
        u = GridVertex(0, 0)
        w = GridVertex(model.levels, model.n - 1)
        v = mid(model, u, w)
        assert v.level == u.level + (w.level - u.level) // 2
        assert table[v.level][v.state] != INF  # midpoint is reachable
        full = path(model, u, w)
        assert full[0] == u and full[-1] == w
        assert [p.level for p in full] == list(range(model.levels + 1))
        assert full[v.level] == v  # path splits at the same midpoint
        total = 0
        for d in range(1, len(full)):
            total = extended_add(total, model.cost(d, full[d].state, full[d - 1].state))
        assert total == sol.value


def test_path_rejects_bad_windows():
    model = MongeCostModel(n=3, levels=2, cost=lambda d, i, j: 0 if j <= i else INF)
    with pytest.raises(ValueError):
        mid(model, GridVertex(1, 0), GridVertex(1, 2))
    with pytest.raises(ValueError):
        path(model, GridVertex(2, 0), GridVertex(1, 1))
    with pytest.raises(ValueError):
        path(model, GridVertex(1, 2), GridVertex(1, 1))
    assert path(model, GridVertex(1, 1), GridVertex(1, 1)) == [GridVertex(1, 1)]


def test_naive_guard_rejects_large_tables():
    big = MongeCostModel(n=1 << 12, levels=1 << 11, cost=lambda d, i, j: 0)
    with pytest.raises(TableSizeError):
        naive_table(big)
    wide = MongeCostModel(n=1 << 13, levels=1 << 10, cost=lambda d, i, j: 0)
    with pytest.raises(TableSizeError):
        naive_solve(wide)


def test_support_gap_detected():
    # level 1 leaves state 1 unreachable between two reachable neighbours,
    # violating the contiguous-support contract at the next level
    def cost(d, i, j):
        if j > i:
            return INF
        if d == 1 and i == 1:
            return INF
        return 1

    model = MongeCostModel(n=3, levels=2, cost=cost)
    with pytest.raises(SupportGapError):
        fill_table_value(model)
