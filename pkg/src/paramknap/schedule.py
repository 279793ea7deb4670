"""End-to-end parametric FPTAS: phi, critical lambdas, one solve per interval."""
from __future__ import annotations

import time
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import (
    EMPTY_SOLUTION,
    OPEN,
    SINGLE_POINT,
    UNBOUNDED_LEFT,
    UNBOUNDED_RIGHT,
    WHOLE_LINE,
    AffineFunction,
    Instance,
    Interval,
    KnapsackSolution,
    make_solution,
    rational_from_json,
    rational_to_json,
    validate_instance,
)
from .greedy import compute_phi
from .knapsack import ExactDP, LawlerFPTAS, solve_scaled_subproblem
from .oracle import ExactProfitFunction, brute_force_parametric
from .subdivision import (
    build_intervals,
    critical_lambdas,
    representative_lambda,
    scale_cap,
    scaled_profits_at,
)

EXACT_INNER = "exact_inner"
FPTAS_INNER = "fptas_inner"
MODES = (EXACT_INNER, FPTAS_INNER)


@dataclass(frozen=True)
class SolutionSchedule:
    epsilon: Fraction
    intervals: tuple[Interval, ...]
    solutions: tuple[KnapsackSolution, ...]
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        ivs = self.intervals
        if len(ivs) != len(self.solutions):
            raise ValueError("one solution per interval")
        if len(ivs) == 1:
            if ivs[0].kind != WHOLE_LINE:
                raise ValueError("a single interval must be the whole line")
            return
        if len(ivs) % 2 == 0 or ivs[0].kind != UNBOUNDED_LEFT or ivs[-1].kind != UNBOUNDED_RIGHT:
            raise ValueError("intervals must alternate from (-inf, c1) to (ck, +inf)")
        for k, iv in enumerate(ivs[1:-1], start=1):
            want = SINGLE_POINT if k % 2 else OPEN
            if iv.kind != want or iv.lower != ivs[k - 1].upper:
                raise ValueError(f"interval {k} breaks the alternating pattern")
        if ivs[-1].lower != ivs[-2].upper:
            raise ValueError("last interval does not continue the pattern")

    @property
    def criticals(self) -> list[Fraction]:
        return [iv.lower for iv in self.intervals if iv.kind == SINGLE_POINT]

    def locate(self, lam) -> int:
        crit = self.criticals
        k = bisect_left(crit, lam)
        if k < len(crit) and crit[k] == lam:
            return 2 * k + 1
        return 2 * k


def query(schedule: SolutionSchedule, lam) -> tuple[KnapsackSolution, Fraction]:
    sol = schedule.solutions[schedule.locate(Fraction(lam))]
    return sol, sol.profit_at(lam)


def solve_parametric(inst: Instance, eps, mode: str = EXACT_INNER) -> SolutionSchedule:
    """Intervals covering the real line with a (1 - eps)-optimal solution on each.

    ``exact_inner`` solves every scaled subproblem exactly; ``fptas_inner``
    uses eps/2 for the scaling and for an inner Lawler FPTAS, so the two
    (1 - eps/2) losses multiply to at least 1 - eps.
    """
    validate_instance(inst)
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    t0 = time.perf_counter()
    half = compute_phi(inst)
    t_phi = time.perf_counter()
    scale_eps = eps if mode == EXACT_INNER else eps / 2
    crit = critical_lambdas(inst, half.phi, scale_eps)
    intervals = build_intervals(crit)
    t_crit = time.perf_counter()

    cap = scale_cap(inst.n, scale_eps)
    if mode == EXACT_INNER:
        inner = ExactDP(profit_bound=cap)
    else:
        inner = LawlerFPTAS(scale_eps)
    weights = [it.weight for it in inst.items]
    cache: dict[tuple, KnapsackSolution] = {}
    solutions = []
    for iv in intervals:
        lam = representative_lambda(iv)
        phi_val = half.phi(lam)
        if phi_val == 0:
            solutions.append(EMPTY_SOLUTION)
            continue
        scaled = tuple(scaled_profits_at(inst, phi_val, scale_eps, lam))
        sol = cache.get(scaled)
        if sol is None:
            sub = solve_scaled_subproblem(scaled, weights, inst.capacity, inner)
            sol = cache[scaled] = make_solution(inst, sub.selected)
        solutions.append(sol)
    t_end = time.perf_counter()

    meta = {
        "n": inst.n,
        "mode": mode,
        "phi_pieces": len(half.phi.pieces),
        "criticals": len(crit),
        "intervals": len(intervals),
        "distinct_subproblems": len(cache),
        "seconds_phi": t_phi - t0,
        "seconds_criticals": t_crit - t_phi,
        "seconds_solve": t_end - t_crit,
        "seconds": t_end - t0,
    }
    return SolutionSchedule(eps, tuple(intervals), tuple(solutions), meta)


@dataclass
class Violation:
    lam: Fraction
    profit: Fraction
    pstar: Fraction
    note: str = ""


@dataclass
class CertificateReport:
    violations: list[Violation]
    worst_ratio: Optional[Fraction]  # min profit / p* over checked points with p* > 0
    points_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def _far_witness(diff: AffineFunction, start: Fraction, direction: int) -> Fraction:
    """A lambda beyond ``start`` (in ``direction``) where ``diff`` is negative."""
    root = -diff.intercept / diff.slope
    if direction > 0:
        return max(root, start) + 1
    return min(root, start) - 1


def certify(
    schedule: SolutionSchedule,
    inst: Instance,
    eps=None,
    pstar: Optional[ExactProfitFunction] = None,
) -> CertificateReport:
    """Check ``profit >= (1 - eps) * p*`` on every interval against the exact oracle.

    Solutions are re-priced from the instance, so a stored profit line that
    disagrees with its item set cannot hide a violation. On an open interval
    profit - (1 - eps) p* is concave, so its endpoints (as limits), the
    representative and p*'s breakpoints suffice; unbounded intervals also get
    a slope test at infinity. Where p* = 0 the target is just profit >= 0.
    """
    eps = schedule.epsilon if eps is None else Fraction(eps)
    keep = 1 - eps
    pstar = brute_force_parametric(inst) if pstar is None else pstar
    pfun = pstar.pstar
    bps = pfun.breakpoints
    violations: list[Violation] = []
    worst: Optional[Fraction] = None
    checked = 0

    def check(line: AffineFunction, lam: Fraction, note: str = "") -> None:
        nonlocal worst, checked
        checked += 1
        got, opt = line(lam), pfun(lam)
        if opt > 0:
            r = got / opt
            worst = r if worst is None else min(worst, r)
        if got < keep * opt:
            violations.append(Violation(lam, got, opt, note))

    for iv, stored in zip(schedule.intervals, schedule.solutions):
        bad = [i for i in stored.selected if not 1 <= i <= inst.n]
        if bad:
            raise ValueError(f"schedule references items {bad} but instance has n = {inst.n}")
        sol = make_solution(inst, stored.selected)
        lam_rep = representative_lambda(iv)
        if sol.total_weight > inst.capacity:
            violations.append(Violation(lam_rep, sol.profit_at(lam_rep), pfun(lam_rep), "infeasible"))
            continue
        if sol.profit_line != stored.profit_line:
            violations.append(
                Violation(lam_rep, stored.profit_at(lam_rep), pfun(lam_rep), "stored profit line disagrees with items")
            )
        line = sol.profit_line
        pts = {lam_rep}
        if iv.lower is not None:
            pts.add(iv.lower)
        if iv.upper is not None:
            pts.add(iv.upper)
        lo_i = 0 if iv.lower is None else bisect_left(bps, iv.lower)
        hi_i = len(bps) if iv.upper is None else bisect_left(bps, iv.upper)
        pts.update(bps[lo_i:hi_i])
        for lam in sorted(pts):
            note = "" if lam in iv else "limit at interval boundary"
            check(line, lam, note)
        # beyond the outermost checked point both sides are lines
        if iv.upper is None:
            diff = line - pfun.pieces[-1].scale(keep)
            if diff.slope < 0:
                lam = _far_witness(diff, max(pts), +1)
                check(line, lam, "slope deficit towards +inf")
        if iv.lower is None:
            diff = line - pfun.pieces[0].scale(keep)
            if diff.slope > 0:
                lam = _far_witness(diff, min(pts), -1)
                check(line, lam, "slope deficit towards -inf")
    return CertificateReport(violations, worst, checked)


def schedule_to_json(schedule: SolutionSchedule, n: Optional[int] = None) -> dict:
    def bound(x, inf):
        return inf if x is None else rational_to_json(x)

    out = {"epsilon": rational_to_json(schedule.epsilon)}
    if n is not None:
        out["n"] = n
    out["intervals"] = [
        {
            "lo": bound(iv.lower, "-inf"),
            "hi": bound(iv.upper, "+inf"),
            "kind": iv.kind,
            "items": list(sol.selected),
            "weight": sol.total_weight,
            "profit": {
                "alpha": rational_to_json(sol.profit_line.intercept),
                "beta": rational_to_json(sol.profit_line.slope),
            },
        }
        for iv, sol in zip(schedule.intervals, schedule.solutions)
    ]
    return out


def schedule_from_json(data: dict) -> SolutionSchedule:
    def bound(x):
        return None if x in ("-inf", "+inf") else rational_from_json(x)

    intervals, solutions = [], []
    for d in data["intervals"]:
        intervals.append(Interval(bound(d["lo"]), bound(d["hi"]), d["kind"]))
        line = AffineFunction(rational_from_json(d["profit"]["alpha"]), rational_from_json(d["profit"]["beta"]))
        items = tuple(sorted(int(i) for i in d["items"]))
        solutions.append(KnapsackSolution(items, int(d.get("weight", 0)), line))
    meta = {"n": data["n"]} if "n" in data else {}
    return SolutionSchedule(rational_from_json(data["epsilon"]), tuple(intervals), tuple(solutions), meta)
