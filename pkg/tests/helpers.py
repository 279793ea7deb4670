"""Independent brute-force helpers and hypothesis strategies for the tests."""
from fractions import Fraction
from itertools import combinations

import hypothesis.strategies as st

from paramknap.core import AffineFunction, Instance, Item


def all_subsets(n):
    for r in range(n + 1):
        yield from combinations(range(1, n + 1), r)


def enumerate_best(weights, profits, capacity):
    """Best total profit over all 2^n subsets (independent of the package)."""
    sums = [(0, 0)]
    for w, p in zip(weights, profits):
        sums += [(sw + w, sp + p) for sw, sp in sums]
    return max(sp for sw, sp in sums if sw <= capacity)


def pstar_at(inst, lam):
    lam = Fraction(lam)
    return enumerate_best(
        [it.weight for it in inst.items], [it.profit(lam) for it in inst.items], inst.capacity
    )


def pointwise_max(lines, lam):
    return max(line(lam) for line in lines)


def P(*items, W):
    return Instance(W, tuple(Item(*t) for t in items))


rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 12))


@st.composite
def instances(draw, n_max=8, w_max=10, c_max=10):
    n = draw(st.integers(1, n_max))
    items = [
        Item(draw(st.integers(1, w_max)), draw(st.integers(-c_max, c_max)), draw(st.integers(-c_max, c_max)))
        for _ in range(n)
    ]
    top = max(it.weight for it in items)
    total = sum(it.weight for it in items)
    capacity = draw(st.integers(top, max(top, total)))
    return Instance(capacity, tuple(items))


lines = st.builds(AffineFunction, st.integers(-30, 30), st.integers(-8, 8))
