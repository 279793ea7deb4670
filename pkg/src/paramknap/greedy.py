"""Greedy 1/2-approximation at fixed lambda and its convex parametric version phi."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    EMPTY_SOLUTION,
    ZERO_LINE,
    AffineFunction,
    Instance,
    KnapsackSolution,
    PiecewiseLinearFunction,
    make_solution,
)
from .envelope import upper_envelope


@dataclass(frozen=True)
class OrderingEvent:
    """A lambda where the greedy order (or the set of profitable items) may change.

    ``causes`` lists ``("crossing", i, j)`` for ratio crossings and
    ``("sign", i)`` for profit roots, items 1-based.
    """

    lam: Fraction
    causes: tuple[tuple, ...]


@dataclass(frozen=True)
class HalfApproxFunction:
    phi: PiecewiseLinearFunction
    witnesses: tuple[KnapsackSolution, ...]  # one per piece of phi

    def __call__(self, lam) -> Fraction:
        return self.phi(lam)


def greedy_order(inst: Instance, lam: Fraction) -> list[int]:
    """Items with non-negative profit at ``lam``, by decreasing profit/weight, ties by index."""
    keyed = []
    for i, it in enumerate(inst.items, start=1):
        p = it.profit(lam)
        if p >= 0:
            keyed.append((-p / it.weight, i))
    keyed.sort()
    return [i for _, i in keyed]


def greedy_prefix(inst: Instance, lam: Fraction) -> KnapsackSolution:
    """Pack in greedy order until the first item that does not fit."""
    room = inst.capacity
    chosen = []
    for i in greedy_order(inst, lam):
        w = inst.item(i).weight
        if w > room:
            break
        chosen.append(i)
        room -= w
    return make_solution(inst, chosen)


def best_single_item(inst: Instance, lam: Fraction) -> KnapsackSolution:
    best, best_p = None, Fraction(0)
    for i, it in enumerate(inst.items, start=1):
        p = it.profit(lam)
        if p > best_p:
            best, best_p = i, p
    return EMPTY_SOLUTION if best is None else make_solution(inst, [best])


def greedy_half_fixed(inst: Instance, lam) -> KnapsackSolution:
    lam = Fraction(lam)
    prefix = greedy_prefix(inst, lam)
    single = best_single_item(inst, lam)
    return prefix if prefix.profit_at(lam) >= single.profit_at(lam) else single


def ordering_events(inst: Instance) -> list[OrderingEvent]:
    causes: dict[Fraction, list[tuple]] = {}
    items = inst.items
    for i, it in enumerate(items, start=1):
        if it.slope != 0:
            causes.setdefault(Fraction(-it.intercept, it.slope), []).append(("sign", i))
    for i in range(len(items)):
        wi, ai, bi = items[i].weight, items[i].intercept, items[i].slope
        for j in range(i + 1, len(items)):
            wj, aj, bj = items[j].weight, items[j].intercept, items[j].slope
            # (ai + lam bi)/wi == (aj + lam bj)/wj
            coef = wj * bi - wi * bj
            if coef != 0:
                lam = Fraction(wi * aj - wj * ai, coef)
                causes.setdefault(lam, []).append(("crossing", i + 1, j + 1))
    return [OrderingEvent(lam, tuple(causes[lam])) for lam in sorted(causes)]


def sample_points(events: Sequence[Fraction]) -> list[Fraction]:
    """One lambda inside every elementary interval cut out by ``events``."""
    if not events:
        return [Fraction(0)]
    pts = [events[0] - 1]
    pts.extend((x + y) / 2 for x, y in zip(events, events[1:]))
    pts.append(events[-1] + 1)
    return pts


def candidate_lines(inst: Instance) -> list[tuple[AffineFunction, KnapsackSolution]]:
    """The line set S with a witness solution per line, duplicates removed.

    Contains the greedy prefix line of every elementary interval, each item's
    own profit line and the zero line.
    """
    events = [e.lam for e in ordering_events(inst)]
    out: dict[AffineFunction, KnapsackSolution] = {}
    for lam in sample_points(events):
        sol = greedy_prefix(inst, lam)
        out.setdefault(sol.profit_line, sol)
    for i in range(1, inst.n + 1):
        sol = make_solution(inst, [i])
        out.setdefault(sol.profit_line, sol)
    out.setdefault(ZERO_LINE, EMPTY_SOLUTION)
    return list(out.items())


def compute_phi(inst: Instance) -> HalfApproxFunction:
    cands = candidate_lines(inst)
    env = upper_envelope([line for line, _ in cands])
    return HalfApproxFunction(env, tuple(cands[k][1] for k in env.labels))
