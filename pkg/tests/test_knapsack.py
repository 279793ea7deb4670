from fractions import Fraction
from math import floor

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from helpers import enumerate_best
from paramknap.knapsack import (
    ExactDP,
    IntegerProfitInstance,
    LawlerFPTAS,
    dp_exact,
    dp_table,
    fptas_profit_bound,
    greedy_half_integer,
    lawler_fptas,
    solve_scaled_subproblem,
)


@st.composite
def int_instances(draw, n_max=12, w_max=15, p_max=30, p_min=-30):
    n = draw(st.integers(0, n_max))
    weights = draw(st.lists(st.integers(1, w_max), min_size=n, max_size=n))
    profits = draw(st.lists(st.integers(p_min, p_max), min_size=n, max_size=n))
    capacity = draw(st.integers(max(weights, default=0), max(sum(weights), max(weights, default=0))))
    return IntegerProfitInstance(capacity, tuple(weights), tuple(profits))


def test_dp_exact_small():
    inst = IntegerProfitInstance(5, (2, 3, 4), (3, 4, 5))
    sol = dp_exact(inst)
    assert sol.selected == (1, 2) and sol.profit == 7
    assert enumerate_best(inst.weights, inst.profits, inst.capacity) == 7


def test_dp_exact_never_packs_negative():
    sol = dp_exact(IntegerProfitInstance(5, (2, 3), (-1, 4)))
    assert sol.selected == (2,) and sol.profit == 4


def test_dp_exact_zero_profit_tie_prefers_empty():
    sol = dp_exact(IntegerProfitInstance(3, (3,), (0,)))
    assert sol.selected == () and sol.profit == 0


def test_dp_table_boundary_rows():
    inst = IntegerProfitInstance(6, (2, 3, 4), (3, 4, 5))
    t = dp_table(inst, 12)
    assert t[0, 0] == 0 and (t[0, 1:] == 7).all()
    assert (np.diff(t, axis=0) <= 0).all()


@given(int_instances())
def test_dp_exact_matches_enumeration(inst):
    sol = dp_exact(inst)
    assert sol.profit == enumerate_best(inst.weights, inst.profits, inst.capacity)
    assert sol.total_weight <= inst.capacity
    assert sol.profit == sum(inst.profits[i - 1] for i in sol.selected)
    assert all(inst.profits[i - 1] >= 0 for i in sol.selected)


def test_lawler_example():
    inst = IntegerProfitInstance(5, (2, 3, 4), (3, 4, 5))
    sol = lawler_fptas(inst, Fraction(1, 2), Fraction(4))
    assert sol.profit >= Fraction(7, 2)
    assert sol.profit >= 4


def test_lawler_single_item():
    for eps in (Fraction(1, 2), Fraction(1, 10)):
        assert lawler_fptas(IntegerProfitInstance(1, (1,), (10,)), eps, Fraction(10)).selected == (1,)


def test_lawler_degenerate_inputs():
    assert LawlerFPTAS(Fraction(1, 2)).solve(IntegerProfitInstance(3, (1, 2), (0, 0))).selected == ()
    with pytest.raises(ValueError):
        lawler_fptas(IntegerProfitInstance(3, (1,), (0,)), Fraction(1, 2), Fraction(0))


@given(int_instances(), st.sampled_from([Fraction(1, 2), Fraction(1, 4), Fraction(1, 10)]))
def test_lawler_guarantee(inst, eps):
    opt = dp_exact(inst).profit
    sol = LawlerFPTAS(eps).solve(inst)
    assert sol.total_weight <= inst.capacity
    assert sol.profit >= (1 - eps) * opt


@given(int_instances(p_min=0))
def test_greedy_half_integer(inst):
    opt = enumerate_best(inst.weights, inst.profits, inst.capacity)
    pbar = greedy_half_integer(inst).profit
    assert opt <= 2 * pbar and pbar <= opt


@given(int_instances(p_min=-5), st.sampled_from([Fraction(1, 2), Fraction(1, 4), Fraction(1, 10)]))
def test_scaled_profit_bound(inst, eps):
    pbar = greedy_half_integer(inst).profit
    if pbar <= 0:
        return
    m = eps * pbar / inst.n
    best = dp_exact(inst)
    scaled_sum = sum(floor(inst.profits[i - 1] / m) for i in best.selected)
    assert scaled_sum <= fptas_profit_bound(inst.n, eps) + inst.n


def test_subproblem_all_excluded():
    assert solve_scaled_subproblem([None, None], [1, 2], 3, ExactDP()).selected == ()


def test_subproblem_exact_packs_both():
    sol = solve_scaled_subproblem([2, 3], [2, 3], 5, ExactDP())
    assert sol.selected == (1, 2) and sol.profit == 5
    assert enumerate_best([2, 3], [2, 3], 5) == 5


def test_subproblem_maps_indices_back():
    sol = solve_scaled_subproblem([None, 8, None, 1], [1, 1, 1, 1], 1, ExactDP())
    assert sol.selected == (2,)
    assert solve_scaled_subproblem([8], [1], 1, ExactDP()).selected == (1,)
