import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
import hypothesis.strategies as st

from helpers import P
from paramknap.core import (
    EMPTY_SOLUTION,
    AffineFunction,
    Instance,
    Interval,
    InvalidInstance,
    Item,
    PiecewiseLinearFunction,
    eval_affine,
    eval_piecewise,
    is_continuous,
    make_solution,
    parse_rational,
    rational_from_json,
    rational_to_json,
    slopes_increase,
    solution_profit_at,
    validate_instance,
)
from paramknap.envelope import upper_envelope


def test_valid_instance_passes_through():
    inst = P((2, 1, 0), W=5)
    assert validate_instance(inst) is inst


@pytest.mark.parametrize(
    "inst, msg",
    [
        (P((6, 1, 0), W=5), "weight exceeds capacity, item 1"),
        (P((1, 3, 2), W=0), "weight exceeds capacity, item 1"),
        (P((2, 0, 0), (0, 1, 1), W=5), "weight must be positive, item 2"),
        (Instance(3, ()), "no items"),
    ],
)
def test_invalid_instances(inst, msg):
    with pytest.raises(InvalidInstance, match=msg):
        validate_instance(inst)


def test_instance_json_round_trip():
    inst = P((2, -1, 3), (4, 5, -6), W=7)
    assert Instance.from_json(inst.to_json()) == inst
    assert inst.to_json() == {"capacity": 7, "items": [{"w": 2, "a": -1, "b": 3}, {"w": 4, "a": 5, "b": -6}]}


@pytest.mark.parametrize(
    "data, msg",
    [
        ({"capacity": 7, "items": [{"w": 2, "a": "7/2", "b": 1}]}, "a of item 1"),
        ({"capacity": 7, "items": [{"w": 2.5, "a": 1, "b": 1}]}, "w of item 1"),
        ({"capacity": True, "items": [{"w": 1, "a": 1, "b": 1}]}, "capacity"),
        ({"capacity": 7, "items": [{"w": 2, "a": 1}]}, "malformed"),
    ],
)
def test_instance_json_rejects_non_integers(data, msg):
    with pytest.raises(InvalidInstance, match=msg):
        Instance.from_json(data)


@pytest.mark.parametrize(
    "f, lam, want",
    [
        (AffineFunction(2, 3), Fraction(0), Fraction(2)),
        (AffineFunction(1, 1), Fraction(1, 2), Fraction(3, 2)),
        (AffineFunction(-4, 2), Fraction(2), Fraction(0)),
    ],
)
def test_eval_affine(f, lam, want):
    assert eval_affine(f, lam) == want


MAX_1_LAM = PiecewiseLinearFunction((Fraction(1),), (AffineFunction(1, 0), AffineFunction(0, 1)), convex=True)


@pytest.mark.parametrize("lam, want", [(0, 1), (1, 1), (5, 5), (Fraction(-7, 3), 1)])
def test_eval_piecewise(lam, want):
    assert eval_piecewise(MAX_1_LAM, lam) == want


def test_piecewise_rejects_discontinuity_and_bad_convex_flag():
    with pytest.raises(ValueError, match="discontinuity"):
        PiecewiseLinearFunction((Fraction(0),), (AffineFunction(1, 0), AffineFunction(0, 1)))
    with pytest.raises(ValueError, match="convex"):
        PiecewiseLinearFunction((Fraction(1),), (AffineFunction(0, 1), AffineFunction(1, 0)), convex=True)
    with pytest.raises(ValueError, match="one more piece"):
        PiecewiseLinearFunction((), (AffineFunction(0, 1), AffineFunction(1, 0)))


def test_segments_cover_the_line():
    f = PiecewiseLinearFunction(
        (Fraction(-1), Fraction(1)), (AffineFunction(0, -1), AffineFunction(1, 0), AffineFunction(0, 1)), convex=True
    )
    kinds = [iv.kind for iv, _ in f.segments]
    assert kinds == ["unbounded_left", "closed", "unbounded_right"]
    assert [str(iv) for iv, _ in f.segments] == ["(-inf, -1)", "[-1, 1]", "(1, +inf)"]


def test_solution_profit_examples():
    inst = P((1, 2, -1), W=1)
    assert solution_profit_at(make_solution(inst, [1]), Fraction(1)) == 1
    for lam in (Fraction(-5), Fraction(0), Fraction(9, 2)):
        assert solution_profit_at(EMPTY_SOLUTION, lam) == 0


def test_solution_line_is_sum_of_item_lines():
    inst = P((1, 1, 1), (1, 2, -1), W=2)
    sol = make_solution(inst, [2, 1])
    assert sol.selected == (1, 2)
    assert sol.profit_line == AffineFunction(3, 0)
    lam = Fraction(3)
    # oracle: evaluate each item separately, then sum
    assert sol.profit_at(lam) == sum(it.profit(lam) for it in inst.items) == 3


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_rational_canonical_round_trip(num, den):
    x = Fraction(num, den)
    back = rational_from_json(rational_to_json(x))
    assert back == x
    assert back.denominator > 0
    assert gcd(abs(back.numerator), back.denominator) == 1


def test_parse_rational_rejects_decimals():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == -4
    for bad in ("0.5", "1/0", "a/b", "1/-2"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_interval_membership_and_invariants():
    assert Fraction(1) in Interval(Fraction(1), Fraction(1), "single_point")
    assert Fraction(1) not in Interval(Fraction(1), Fraction(2), "open")
    assert Fraction(10**9) in Interval(Fraction(1), None, "unbounded_right")
    with pytest.raises(ValueError):
        Interval(Fraction(2), Fraction(1), "open")
    with pytest.raises(ValueError):
        Interval(None, None, "unbounded_left")


def convex_chord_check(f, rng, trials=1000, span=50):
    for _ in range(trials):
        a, b, c = sorted(Fraction(rng.randint(-span * 8, span * 8), 8) for _ in range(3))
        if a == c:
            continue
        t = (b - a) / (c - a)
        assert f(b) <= (1 - t) * f(a) + t * f(c)


def test_convexity_flag_soundness():
    rng = random.Random(3)
    lines = [AffineFunction(rng.randint(-20, 20), s) for s in range(-5, 6)]
    f = upper_envelope(lines)
    assert f.convex and slopes_increase(f) and is_continuous(f)
    convex_chord_check(f, rng)
