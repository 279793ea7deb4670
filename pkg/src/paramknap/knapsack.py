"""Fixed-lambda 0/1 knapsack solvers over integer profits.

Both solvers follow the same contract: items with negative profit are never
packed, and the returned selection uses 1-based indices into the instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Optional, Protocol, Sequence

import numpy as np


@dataclass(frozen=True)
class IntegerProfitInstance:
    capacity: int
    weights: tuple[int, ...]
    profits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "profits", tuple(int(p) for p in self.profits))
        if len(self.weights) != len(self.profits):
            raise ValueError("weights and profits differ in length")
        if any(w < 1 or w > self.capacity for w in self.weights):
            raise ValueError("every weight must lie in [1, capacity]")

    @property
    def n(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class IntegerSolution:
    selected: tuple[int, ...]
    total_weight: int
    profit: int


EMPTY = IntegerSolution((), 0, 0)


def _solution(inst: IntegerProfitInstance, chosen) -> IntegerSolution:
    chosen = tuple(sorted(chosen))
    return IntegerSolution(
        chosen,
        sum(inst.weights[i - 1] for i in chosen),
        sum(inst.profits[i - 1] for i in chosen),
    )


def dp_table(inst: IntegerProfitInstance, profit_bound: int) -> np.ndarray:
    """``table[k, p]`` = least weight reaching profit exactly p with items 1..k.

    ``capacity + 1`` marks an unreachable cell.
    """
    inf = inst.capacity + 1
    table = np.full((inst.n + 1, profit_bound + 1), inf, dtype=np.int64)
    table[0, 0] = 0
    for k in range(1, inst.n + 1):
        prev, row = table[k - 1], table[k]
        row[:] = prev
        pk, wk = inst.profits[k - 1], inst.weights[k - 1]
        if 0 <= pk <= profit_bound:
            packed = np.minimum(prev[: profit_bound + 1 - pk] + wk, inf)
            np.minimum(row[pk:], packed, out=row[pk:])
    return table


def dp_exact(inst: IntegerProfitInstance, profit_bound: Optional[int] = None) -> IntegerSolution:
    """Optimal selection via the minimum-weight-per-profit table.

    ``profit_bound`` must be at least the best achievable profit; it defaults to
    the sum of the non-negative profits.
    """
    total = sum(p for p in inst.profits if p > 0)
    bound = total if profit_bound is None else min(int(profit_bound), total)
    if bound < 0:
        raise ValueError("profit bound must be non-negative")
    table = dp_table(inst, bound)
    reachable = np.nonzero(table[inst.n] <= inst.capacity)[0]
    p = int(reachable[-1])
    best = p
    chosen = []
    for k in range(inst.n, 0, -1):
        # prefer leaving item k out when that reaches the same weight
        if table[k, p] == table[k - 1, p]:
            continue
        chosen.append(k)
        p -= inst.profits[k - 1]
    assert p == 0
    sol = _solution(inst, chosen)
    assert sol.profit == best and sol.total_weight <= inst.capacity
    return sol


def greedy_half_integer(inst: IntegerProfitInstance) -> IntegerSolution:
    """Classic ratio-greedy prefix or best single item, whichever is better."""
    order = sorted(
        (i for i in range(1, inst.n + 1) if inst.profits[i - 1] >= 0),
        key=lambda i: (-Fraction(inst.profits[i - 1], inst.weights[i - 1]), i),
    )
    room, prefix = inst.capacity, []
    for i in order:
        if inst.weights[i - 1] > room:
            break
        prefix.append(i)
        room -= inst.weights[i - 1]
    a = _solution(inst, prefix)
    top = max(range(1, inst.n + 1), key=lambda i: (inst.profits[i - 1], -i), default=None)
    if top is None or inst.profits[top - 1] <= a.profit:
        return a
    return _solution(inst, [top])


def fptas_profit_bound(n: int, eps: Fraction) -> int:
    return floor(Fraction(2 * n) / eps)


def lawler_fptas(inst: IntegerProfitInstance, eps: Fraction, pbar: Fraction) -> IntegerSolution:
    """Scale profits by ``M = eps * pbar / n``, solve the scaled DP exactly.

    Requires ``opt / 2 <= pbar <= opt``; the result is within ``1 - eps`` of opt.
    """
    eps, pbar = Fraction(eps), Fraction(pbar)
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if pbar <= 0:
        raise ValueError("pbar must be positive; short-circuit degenerate instances first")
    n = inst.n
    m = eps * pbar / n
    scaled = tuple(floor(p / m) if p >= 0 else -1 for p in inst.profits)
    chosen = dp_exact(
        IntegerProfitInstance(inst.capacity, inst.weights, scaled), fptas_profit_bound(n, eps)
    ).selected
    return _solution(inst, chosen)


class SolverContract(Protocol):
    guarantee: Fraction

    def solve(self, inst: IntegerProfitInstance) -> IntegerSolution: ...


class ExactDP:
    guarantee = Fraction(1)

    def __init__(self, profit_bound: Optional[int] = None):
        self.profit_bound = profit_bound

    def solve(self, inst: IntegerProfitInstance) -> IntegerSolution:
        return dp_exact(inst, self.profit_bound)


class LawlerFPTAS:
    """Inner FPTAS with ``pbar`` taken from the greedy 1/2-approximation."""

    def __init__(self, eps: Fraction):
        self.eps = Fraction(eps)
        self.guarantee = 1 - self.eps

    def solve(self, inst: IntegerProfitInstance) -> IntegerSolution:
        pbar = greedy_half_integer(inst).profit
        if pbar <= 0:
            return EMPTY
        return lawler_fptas(inst, self.eps, Fraction(pbar))


def solve_scaled_subproblem(
    scaled_profits: Sequence[Optional[int]],
    weights: Sequence[int],
    capacity: int,
    inner: SolverContract,
) -> IntegerSolution:
    """Solve with excluded (``None``) items dropped; indices refer to the full item list."""
    keep = [i for i, p in enumerate(scaled_profits, start=1) if p is not None]
    if not keep:
        return EMPTY
    sub = IntegerProfitInstance(
        capacity, tuple(weights[i - 1] for i in keep), tuple(scaled_profits[i - 1] for i in keep)
    )
    sol = inner.solve(sub)
    return IntegerSolution(tuple(keep[k - 1] for k in sol.selected), sol.total_weight, sol.profit)
