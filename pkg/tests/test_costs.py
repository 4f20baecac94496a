"""Extended cost arithmetic and the Monge condition checkers."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mongedp.monge_core import (
    INF,
    ImplicitMatrix,
    MongeCostModel,
    extended_add,
    is_finite,
    is_monge,
    is_monge_cost_model,
)

finite_costs = st.one_of(
    st.integers(min_value=-(10**9), max_value=10**9),
    st.fractions(max_denominator=1000),
)


def test_inf_is_not_finite():
    assert not is_finite(INF)
    assert is_finite(0)
    assert is_finite(Fraction(-3, 7))


@given(finite_costs, finite_costs)
def test_extended_add_matches_plain_addition(a, b):
    assert extended_add(a, b) == a + b


@given(finite_costs)
def test_extended_add_saturates(a):
    assert extended_add(a, INF) == INF
    assert extended_add(INF, a) == INF
    assert extended_add(INF, INF) == INF


def _dense(rows):
    return ImplicitMatrix(len(rows), len(rows[0]), lambda i, j: rows[i][j])


@given(
    st.integers(2, 6),
    st.integers(2, 6),
    st.data(),
)
def test_distribution_sums_are_monge(nr, nc, data):
    # M[i][j] = sum of a nonnegative grid over {i' <= i, j' >= j}: the
    # textbook construction of a Monge matrix
    grid = [
        [data.draw(st.integers(0, 9)) for _ in range(nc)] for _ in range(nr)
    ]
    m = [
        [sum(grid[a][b] for a in range(i + 1) for b in range(j, nc)) for j in range(nc)]
        for i in range(nr)
    ]
    assert is_monge(_dense(m))


def test_monge_counterexample():
    assert not is_monge(_dense([[3, 0], [0, 3]]))


def test_monge_with_inf_rhs_holds():
    # INF on the right-hand side can never break the inequality
    assert is_monge(_dense([[0, INF], [1, 5]]))


def test_monge_with_inf_lhs_breaks():
    assert not is_monge(_dense([[INF, 1], [3, INF]]))


def test_degenerate_matrices_are_monge():
    assert is_monge(_dense([[7]]))
    assert is_monge(ImplicitMatrix(1, 4, lambda i, j: j))
    assert is_monge(ImplicitMatrix(4, 1, lambda i, j: i))


def test_band_arrays_come_in_pairs():
    with pytest.raises(ValueError):
        ImplicitMatrix(2, 2, lambda i, j: 0, band_lo=[0, 0])
    with pytest.raises(ValueError):
        ImplicitMatrix(2, 2, lambda i, j: 0, band_hi=[1, 1])
    ImplicitMatrix(2, 2, lambda i, j: 0, band_lo=[0, 0], band_hi=[1, 1])


def test_cost_model_monge_check():
    def good(d, i, j):
        if j > i:
            return INF
        return (i - j) ** 2 + d * i

    assert is_monge_cost_model(MongeCostModel(n=6, levels=3, cost=good))

    def bad(d, i, j):
        if j > i:
            return INF
        return -((i - j) ** 2)  # concave in the step: Monge fails

    assert not is_monge_cost_model(MongeCostModel(n=4, levels=1, cost=bad))


def test_cost_model_check_tolerates_inf_above_diagonal():
    # j > i cells are INF by convention; they appear only on the right-hand
    # side of boundary quadruples, where INF can never break the inequality
    def cost(d, i, j):
        if j > i:
            return INF
        return i - j

    assert is_monge_cost_model(MongeCostModel(n=5, levels=2, cost=cost))
