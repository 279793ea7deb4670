"""Brute-force references for small instances."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import Instance, KnapsackSolution, PiecewiseLinearFunction, AffineFunction, make_solution
from .envelope import upper_envelope

ORACLE_LIMIT = 20


class OracleLimitError(ValueError):
    pass


def _check_size(inst: Instance, limit: int) -> None:
    if inst.n > limit:
        raise OracleLimitError(f"oracle limit is n <= {limit}, instance has n = {inst.n}")


@dataclass(frozen=True)
class ExactProfitFunction:
    pstar: PiecewiseLinearFunction
    witnesses: tuple[KnapsackSolution, ...]

    def __call__(self, lam) -> Fraction:
        return self.pstar(lam)


def feasible_lines(inst: Instance) -> dict[int, tuple[int, int]]:
    """Best intercept per total slope over all feasible subsets, as slope -> (intercept, mask).

    States are pruned per slope to the (weight, intercept) Pareto front, which
    loses nothing for the final envelope.
    """
    # slope -> list of (weight, intercept, mask), weight ascending, intercept strictly ascending
    fronts: dict[int, list[tuple[int, int, int]]] = {0: [(0, 0, 0)]}
    for k, it in enumerate(inst.items):
        bit = 1 << k
        merged: dict[int, list[tuple[int, int, int]]] = {s: list(f) for s, f in fronts.items()}
        for s, front in fronts.items():
            for w, a, mask in front:
                if w + it.weight <= inst.capacity:
                    merged.setdefault(s + it.slope, []).append((w + it.weight, a + it.intercept, mask | bit))
        fronts = {}
        for s, cands in merged.items():
            cands.sort(key=lambda t: (t[0], -t[1], t[2]))
            kept = []
            for t in cands:
                if not kept or t[1] > kept[-1][1]:
                    kept.append(t)
            fronts[s] = kept
    return {s: (front[-1][1], front[-1][2]) for s, front in fronts.items()}


def _mask_items(mask: int) -> list[int]:
    return [k + 1 for k in range(mask.bit_length()) if mask >> k & 1]


def brute_force_parametric(inst: Instance, limit: int = ORACLE_LIMIT) -> ExactProfitFunction:
    """Exact optimal profit function p* as the envelope of all feasible subset lines."""
    _check_size(inst, limit)
    best = feasible_lines(inst)
    slopes = sorted(best)
    env = upper_envelope([AffineFunction(best[s][0], s) for s in slopes])
    witnesses = tuple(make_solution(inst, _mask_items(best[slopes[k]][1])) for k in env.labels)
    return ExactProfitFunction(env, witnesses)


def brute_force_fixed(inst: Instance, lam, limit: int = ORACLE_LIMIT) -> KnapsackSolution:
    """Best feasible subset at ``lam``; ties go to the lexicographically smallest index tuple."""
    _check_size(inst, limit)
    lam = Fraction(lam)
    profits = [it.profit(lam) for it in inst.items]
    weights = [it.weight for it in inst.items]
    best_key, best = None, ()
    for r in range(inst.n + 1):
        for combo in combinations(range(1, inst.n + 1), r):
            if sum(weights[i - 1] for i in combo) > inst.capacity:
                continue
            key = (-sum(profits[i - 1] for i in combo), combo)
            if best_key is None or key < best_key:
                best_key, best = key, combo
    return make_solution(inst, best)
