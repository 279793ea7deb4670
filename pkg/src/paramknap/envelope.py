"""Upper envelope of full (unbounded) lines."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .core import AffineFunction, PiecewiseLinearFunction


def intersect(f: AffineFunction, g: AffineFunction) -> Optional[Fraction]:
    """Lambda where ``f`` and ``g`` meet, or None for parallel (incl. identical) lines."""
    ds = f.slope - g.slope
    if ds == 0:
        return None
    return (g.intercept - f.intercept) / ds


def upper_envelope(lines: Sequence[AffineFunction]) -> PiecewiseLinearFunction:
    """Pointwise maximum of ``lines`` as a convex piecewise-linear function.

    ``labels`` on the result holds, per piece, the index into ``lines`` of the
    line realizing that piece (the first one, if the input has duplicates).
    Lines are swept by increasing slope with a hull stack, so this is
    O(m log m) and never needs a bounding interval.
    """
    if not lines:
        raise ValueError("upper envelope of an empty line set")
    order = sorted(range(len(lines)), key=lambda k: (lines[k].slope, -lines[k].intercept))
    best_per_slope = []
    for k in order:
        if best_per_slope and lines[best_per_slope[-1]].slope == lines[k].slope:
            continue
        best_per_slope.append(k)

    stack: list[int] = []
    xs: list[Fraction] = []  # xs[t] = where stack[t+1] overtakes stack[t]
    for k in best_per_slope:
        line = lines[k]
        while stack:
            x = intersect(lines[stack[-1]], line)
            if xs and x <= xs[-1]:
                # top of stack is never strictly maximal (or only at one point)
                stack.pop()
                xs.pop()
                continue
            xs.append(x)
            break
        stack.append(k)

    return PiecewiseLinearFunction(
        tuple(xs), tuple(lines[k] for k in stack), convex=True, labels=tuple(stack)
    )
