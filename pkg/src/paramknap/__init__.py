"""FPTAS for the parametric 0/1 knapsack problem with profits a_i + lam * b_i."""
from .core import (
    AffineFunction,
    Instance,
    Interval,
    InvalidInstance,
    Item,
    KnapsackSolution,
    PiecewiseLinearFunction,
    validate_instance,
)
from .envelope import upper_envelope
from .greedy import compute_phi, greedy_half_fixed
from .oracle import brute_force_fixed, brute_force_parametric
from .schedule import SolutionSchedule, certify, query, solve_parametric

__all__ = [
    "AffineFunction",
    "Instance",
    "Interval",
    "InvalidInstance",
    "Item",
    "KnapsackSolution",
    "PiecewiseLinearFunction",
    "SolutionSchedule",
    "brute_force_fixed",
    "brute_force_parametric",
    "certify",
    "compute_phi",
    "greedy_half_fixed",
    "query",
    "solve_parametric",
    "upper_envelope",
    "validate_instance",
]
