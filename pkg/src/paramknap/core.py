"""Exact value types shared by every stage of the parametric pipeline.

All lambda-domain arithmetic goes through :class:`fractions.Fraction`. Floats
only show up when exporting CSV for plots.
"""
from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

SINGLE_POINT = "single_point"
OPEN = "open"
CLOSED = "closed"
UNBOUNDED_LEFT = "unbounded_left"
UNBOUNDED_RIGHT = "unbounded_right"
WHOLE_LINE = "whole_line"


class InvalidInstance(ValueError):
    pass


@dataclass(frozen=True)
class Item:
    weight: int
    intercept: int
    slope: int

    def profit(self, lam: RationalLike) -> Fraction:
        return self.intercept + lam * Fraction(self.slope)

    @property
    def line(self) -> "AffineFunction":
        return AffineFunction(self.intercept, self.slope)


@dataclass(frozen=True)
class Instance:
    capacity: int
    items: tuple[Item, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    @property
    def n(self) -> int:
        return len(self.items)

    def item(self, index: int) -> Item:
        """1-based lookup, matching how items are reported."""
        return self.items[index - 1]

    def to_json(self) -> dict:
        return {
            "capacity": self.capacity,
            "items": [{"w": it.weight, "a": it.intercept, "b": it.slope} for it in self.items],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Instance":
        try:
            items = [
                Item(_json_int(d["w"], f"w of item {k}"), _json_int(d["a"], f"a of item {k}"),
                     _json_int(d["b"], f"b of item {k}"))
                for k, d in enumerate(data["items"], start=1)
            ]
            return cls(_json_int(data["capacity"], "capacity"), tuple(items))
        except (KeyError, TypeError) as exc:
            raise InvalidInstance(f"malformed instance JSON: {exc!r}") from exc


def _json_int(x, what: str) -> int:
    # bool is an int subclass; floats would truncate silently
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidInstance(f"{what} must be an integer, got {x!r}")
    return x


def validate_instance(raw: Instance) -> Instance:
    """Return ``raw`` unchanged if it is a usable instance, else raise InvalidInstance."""
    if raw.n == 0:
        raise InvalidInstance("instance has no items")
    if raw.capacity < 0:
        raise InvalidInstance(f"negative capacity {raw.capacity}")
    for i, it in enumerate(raw.items, start=1):
        if it.weight < 1:
            raise InvalidInstance(f"weight must be positive, item {i}")
        if it.weight > raw.capacity:
            raise InvalidInstance(f"weight exceeds capacity, item {i}")
    return raw


def load_instance(path) -> Instance:
    with open(path) as fh:
        return validate_instance(Instance.from_json(json.load(fh)))


@dataclass(frozen=True)
class AffineFunction:
    """The line ``lam -> intercept + lam * slope``."""

    intercept: Fraction
    slope: Fraction

    def __post_init__(self):
        object.__setattr__(self, "intercept", Fraction(self.intercept))
        object.__setattr__(self, "slope", Fraction(self.slope))

    def __call__(self, lam: RationalLike) -> Fraction:
        return self.intercept + lam * self.slope

    def __add__(self, other: "AffineFunction") -> "AffineFunction":
        return AffineFunction(self.intercept + other.intercept, self.slope + other.slope)

    def __sub__(self, other: "AffineFunction") -> "AffineFunction":
        return AffineFunction(self.intercept - other.intercept, self.slope - other.slope)

    def scale(self, c: RationalLike) -> "AffineFunction":
        return AffineFunction(self.intercept * c, self.slope * c)


ZERO_LINE = AffineFunction(0, 0)


def eval_affine(f: AffineFunction, lam: RationalLike) -> Fraction:
    return f(lam)


@dataclass(frozen=True)
class Interval:
    """A connected subset of the real line; ``None`` bounds mean infinite."""

    lower: Optional[Fraction]
    upper: Optional[Fraction]
    kind: str

    def __post_init__(self):
        lo, hi, kind = self.lower, self.upper, self.kind
        if kind == SINGLE_POINT:
            ok = lo is not None and lo == hi
        elif kind in (OPEN, CLOSED):
            ok = lo is not None and hi is not None and lo < hi
        elif kind == UNBOUNDED_LEFT:
            ok = lo is None and hi is not None
        elif kind == UNBOUNDED_RIGHT:
            ok = lo is not None and hi is None
        elif kind == WHOLE_LINE:
            ok = lo is None and hi is None
        else:
            raise ValueError(f"unknown interval kind {kind!r}")
        if not ok:
            raise ValueError(f"inconsistent interval {lo}, {hi}, {kind}")

    def __contains__(self, lam: RationalLike) -> bool:
        if self.kind in (SINGLE_POINT, CLOSED):
            return self.lower <= lam <= self.upper
        if self.lower is not None and not self.lower < lam:
            return False
        if self.upper is not None and not lam < self.upper:
            return False
        return True

    def __str__(self) -> str:
        lo = "-inf" if self.lower is None else str(self.lower)
        hi = "+inf" if self.upper is None else str(self.upper)
        if self.kind in (SINGLE_POINT, CLOSED):
            return f"[{lo}, {hi}]"
        return f"({lo}, {hi})"


@dataclass(frozen=True)
class PiecewiseLinearFunction:
    """Continuous piecewise-linear function on the whole real line.

    ``pieces[j]`` is active between ``breakpoints[j-1]`` and ``breakpoints[j]``
    (closed at shared breakpoints). ``labels`` is an optional per-piece payload,
    e.g. the index of the input line realizing that piece of an envelope.
    """

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[AffineFunction, ...]
    convex: bool = False
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if len(self.pieces) != len(bps) + 1:
            raise ValueError("need exactly one more piece than breakpoints")
        if any(b1 >= b2 for b1, b2 in zip(bps, bps[1:])):
            raise ValueError("breakpoints must strictly increase")
        for b, left, right in zip(bps, self.pieces, self.pieces[1:]):
            if left(b) != right(b):
                raise ValueError(f"discontinuity at breakpoint {b}")
        if self.convex and not slopes_increase(self):
            raise ValueError("flagged convex but slopes do not strictly increase")
        if self.labels is not None and len(self.labels) != len(self.pieces):
            raise ValueError("labels must match pieces")

    def piece_index(self, lam: RationalLike) -> int:
        # bisect_left puts a breakpoint into the piece on its left; both agree there
        return bisect_left(self.breakpoints, lam)

    def __call__(self, lam: RationalLike) -> Fraction:
        return self.pieces[self.piece_index(lam)](lam)

    def piece_bounds(self, j: int) -> tuple[Optional[Fraction], Optional[Fraction]]:
        lo = self.breakpoints[j - 1] if j > 0 else None
        hi = self.breakpoints[j] if j < len(self.breakpoints) else None
        return lo, hi

    @property
    def segments(self) -> list[tuple[Interval, AffineFunction]]:
        out = []
        for j, line in enumerate(self.pieces):
            lo, hi = self.piece_bounds(j)
            if lo is None and hi is None:
                kind = WHOLE_LINE
            elif lo is None:
                kind = UNBOUNDED_LEFT
            elif hi is None:
                kind = UNBOUNDED_RIGHT
            else:
                kind = CLOSED
            out.append((Interval(lo, hi, kind), line))
        return out


def eval_piecewise(f: PiecewiseLinearFunction, lam: RationalLike) -> Fraction:
    return f(lam)


def slopes_increase(f: PiecewiseLinearFunction) -> bool:
    return all(p.slope < q.slope for p, q in zip(f.pieces, f.pieces[1:]))


def is_continuous(f: PiecewiseLinearFunction) -> bool:
    return all(l(b) == r(b) for b, l, r in zip(f.breakpoints, f.pieces, f.pieces[1:]))


@dataclass(frozen=True)
class KnapsackSolution:
    selected: tuple[int, ...]  # 1-based item indices, sorted
    total_weight: int
    profit_line: AffineFunction

    def profit_at(self, lam: RationalLike) -> Fraction:
        return self.profit_line(lam)


EMPTY_SOLUTION = KnapsackSolution((), 0, ZERO_LINE)


def make_solution(inst: Instance, indices: Iterable[int]) -> KnapsackSolution:
    sel = tuple(sorted(set(indices)))
    a = sum(inst.item(i).intercept for i in sel)
    b = sum(inst.item(i).slope for i in sel)
    w = sum(inst.item(i).weight for i in sel)
    return KnapsackSolution(sel, w, AffineFunction(a, b))


def solution_profit_at(s: KnapsackSolution, lam: RationalLike) -> Fraction:
    return s.profit_at(lam)


def is_feasible(inst: Instance, s: KnapsackSolution) -> bool:
    return s.total_weight <= inst.capacity and all(1 <= i <= inst.n for i in s.selected)


def rational_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def rational_from_json(d: Any) -> Fraction:
    if isinstance(d, dict):
        den = int(d["den"])
        if den <= 0:
            raise ValueError("rational denominator must be positive")
        return Fraction(int(d["num"]), den)
    if isinstance(d, int):
        return Fraction(d)
    raise ValueError(f"not a rational: {d!r}")


def parse_rational(text: str) -> Fraction:
    """Parse an integer or ``num/den`` string; decimals are rejected."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        d = int(den)
    except ValueError:
        raise ValueError(f"expected an integer or 'num/den', got {text!r}") from None
    if d <= 0:
        raise ValueError(f"denominator must be positive in {text!r}")
    return Fraction(int(num), d)


def sorted_unique(values: Iterable[Fraction]) -> list[Fraction]:
    return sorted(set(values))


def max_line_value(lines: Sequence[AffineFunction], lam: RationalLike) -> Fraction:
    return max(line(lam) for line in lines)
