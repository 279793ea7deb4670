"""Critical lambdas of the scaled profits and the interval list they induce.

The scaled profit of item i is ``floor(n * p_i(lam) / (eps * phi(lam)))``.
On one piece of phi the ratio ``f_i = p_i / phi`` is a Moebius function and
hence monotone; the sign of its derivative is the sign of
``b_i * alpha - a_i * beta`` for the piece ``alpha + lam * beta``. Because the
points ``(beta, alpha)`` of a convex phi lie on a concave chain, that sign
changes at most twice, so each item needs at most three monotone runs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Sequence

from .core import (
    OPEN,
    SINGLE_POINT,
    UNBOUNDED_LEFT,
    UNBOUNDED_RIGHT,
    WHOLE_LINE,
    AffineFunction,
    Instance,
    Interval,
    Item,
    PiecewiseLinearFunction,
)

NONDECREASING = "nondecreasing"
NONINCREASING = "nonincreasing"
CONSTANT = "constant"


class DegenerateRegion(ValueError):
    """phi vanishes at the requested lambda, where the empty solution is optimal."""


class InvariantViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class MonotoneRun:
    start: int  # first phi piece, inclusive
    stop: int  # last phi piece, inclusive
    direction: str


@dataclass(frozen=True)
class MonotonePartition:
    item: int
    runs: tuple[MonotoneRun, ...]


def scale_cap(n: int, eps: Fraction) -> int:
    """Largest scaled profit that can occur, floor(2n / eps)."""
    return floor(2 * n / Fraction(eps))


def scaled_profit(
    item: Item, phi_piece: AffineFunction, n: int, eps: Fraction, lam: Fraction
) -> Optional[int]:
    """Scaled profit of ``item`` at ``lam``; None if the item has negative profit there."""
    phi_val = phi_piece(lam)
    if phi_val == 0:
        raise DegenerateRegion(f"phi({lam}) = 0")
    p = item.profit(lam)
    if p < 0:
        return None
    return floor(n * p / (Fraction(eps) * phi_val))


def scaled_profits_at(
    inst: Instance, phi_value: Fraction, eps: Fraction, lam: Fraction
) -> list[Optional[int]]:
    """All scaled profits at ``lam`` given ``phi(lam) > 0``, in integer arithmetic."""
    if phi_value <= 0:
        raise DegenerateRegion(f"phi({lam}) = {phi_value}")
    lam, phi_value, eps = Fraction(lam), Fraction(phi_value), Fraction(eps)
    m, d = lam.numerator, lam.denominator
    # n * p/d / (eps * P/Q) with eps = en/ed
    num_factor = inst.n * eps.denominator * phi_value.denominator
    den = d * eps.numerator * phi_value.numerator
    out: list[Optional[int]] = []
    for it in inst.items:
        pd = it.intercept * d + it.slope * m
        out.append(None if pd < 0 else (num_factor * pd) // den)
    return out


def derivative_sign(item: Item, piece: AffineFunction) -> int:
    v = item.slope * piece.intercept - item.intercept * piece.slope
    return (v > 0) - (v < 0)


def monotone_partitions(item: Item, phi: PiecewiseLinearFunction, index: int = 0) -> MonotonePartition:
    """Group phi's pieces into maximal runs on which p_i / phi is monotone.

    Pieces where the ratio is constant join the run on their left (or the
    following run when they lead). More than three runs would mean phi is not
    convex, so that raises InvariantViolation.
    """
    signs = [derivative_sign(item, piece) for piece in phi.pieces]
    groups: list[list[int]] = []  # [start, stop, sign]
    for j, s in enumerate(signs):
        if groups and (s == 0 or s == groups[-1][2] or groups[-1][2] == 0):
            groups[-1][1] = j
            if groups[-1][2] == 0:
                groups[-1][2] = s
        else:
            groups.append([j, j, s])
    if len(groups) > 3:
        raise InvariantViolation(
            f"item {index}: {len(groups)} monotone runs, phi cannot be convex"
        )
    names = {1: NONDECREASING, -1: NONINCREASING, 0: CONSTANT}
    return MonotonePartition(index, tuple(MonotoneRun(a, b, names[s]) for a, b, s in groups))


def _ratio_at_end(item: Item, piece: AffineFunction, end: Optional[Fraction]) -> Fraction | float:
    """Value (or one-sided limit) of p_i / piece at a finite ``end`` or at infinity.

    Only called on stretches where piece > 0 inside and p_i >= 0.
    """
    a, b = item.intercept, item.slope
    alpha, beta = piece.intercept, piece.slope
    if end is not None:
        phi_e = piece(end)
        p_e = item.profit(end)
        if phi_e > 0:
            return p_e / phi_e
        # phi vanishes at a finite end of the stretch
        if p_e == 0:
            return Fraction(b) / beta
        return float("inf")
    if beta != 0:
        return Fraction(b) / beta
    if b == 0:
        return Fraction(a) / alpha
    return float("inf")


def item_critical_lambdas(
    item: Item, phi: PiecewiseLinearFunction, n: int, eps: Fraction, index: int = 0
) -> set[Fraction]:
    """Lambdas where this item's scaled profit or exclusion status can change.

    Within each monotone run the ratio sweeps a contiguous range, so for each
    piece only the integers between its end values are solved for; one linear
    equation per integer.
    """
    eps = Fraction(eps)
    en, ed = eps.numerator, eps.denominator
    cap = scale_cap(n, eps)
    scale = Fraction(n * ed, en)
    a, b = item.intercept, item.slope
    out: set[Fraction] = set()
    root = None
    if b != 0:
        root = Fraction(-a, b)
        out.add(root)
    elif a < 0:
        return out  # never profitable

    for run in monotone_partitions(item, phi, index).runs:
        for j in range(run.start, run.stop + 1):
            piece = phi.pieces[j]
            if piece.intercept == 0 and piece.slope == 0:
                continue  # phi is zero here
            lo, hi = phi.piece_bounds(j)
            if b > 0 and (lo is None or lo < root):
                lo = root
            elif b < 0 and (hi is None or hi > root):
                hi = root
            if lo is not None and hi is not None and lo > hi:
                continue
            f_lo = _ratio_at_end(item, piece, lo)
            f_hi = _ratio_at_end(item, piece, hi)
            low, high = min(f_lo, f_hi) * scale, max(f_lo, f_hi) * scale
            v_min = max(0, ceil(low))
            v_max = cap if high == float("inf") else min(cap, floor(high))
            alpha, beta = piece.intercept, piece.slope
            for v in range(v_min, v_max + 1):
                # n*ed*(a + lam b) = v*en*(alpha + lam beta)
                coef = n * ed * b - v * en * beta
                if coef == 0:
                    continue
                lam = (v * en * alpha - n * ed * a) / coef
                if (lo is None or lo <= lam) and (hi is None or lam <= hi):
                    out.add(lam)
    return out


def critical_lambdas(inst: Instance, phi: PiecewiseLinearFunction, eps: Fraction) -> list[Fraction]:
    """Sorted distinct critical lambdas over all items, plus every breakpoint of phi."""
    crit: set[Fraction] = set(phi.breakpoints)
    for i, it in enumerate(inst.items, start=1):
        crit |= item_critical_lambdas(it, phi, inst.n, eps, i)
    return sorted(crit)


def build_intervals(criticals: Sequence[Fraction]) -> list[Interval]:
    if not criticals:
        return [Interval(None, None, WHOLE_LINE)]
    out = [Interval(None, criticals[0], UNBOUNDED_LEFT)]
    for c, nxt in zip(criticals, criticals[1:]):
        out.append(Interval(c, c, SINGLE_POINT))
        out.append(Interval(c, nxt, OPEN))
    out.append(Interval(criticals[-1], criticals[-1], SINGLE_POINT))
    out.append(Interval(criticals[-1], None, UNBOUNDED_RIGHT))
    return out


def representative_lambda(iv: Interval) -> Fraction:
    if iv.kind == SINGLE_POINT:
        return iv.lower
    if iv.kind == OPEN:
        return (iv.lower + iv.upper) / 2
    if iv.kind == UNBOUNDED_LEFT:
        return iv.upper - 1
    if iv.kind == UNBOUNDED_RIGHT:
        return iv.lower + 1
    return Fraction(0)
