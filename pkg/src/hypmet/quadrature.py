"""Scalar quadrature: adaptive Simpson with an error estimate, and a fixed
composite rule used as a brute-force oracle in tests."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    converged: bool
    evaluations: int


def composite_simpson(f, a: float, b: float, panels: int) -> float:
    """Plain Simpson rule over `panels` equal panels (2*panels+1 nodes)."""
    if panels < 1:
        raise ValueError("panels must be >= 1")
    n = 2 * panels
    h = (b - a) / n
    total = f(a) + f(b)
    for k in range(1, n):
        total += f(a + k * h) * (4 if k % 2 else 2)
    return total * h / 3.0


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-9,
                     max_depth: int = 48) -> QuadratureResult:
    """Adaptive Simpson with interval halving.

    The local acceptance test is the classic |S2 - S1| <= 15 tol rule, and
    accepted intervals contribute the extrapolated value S2 + (S2 - S1)/15.
    Intervals still failing at max_depth contribute their current value and
    flip converged to False.
    """
    if not b > a:
        if b == a:
            return QuadratureResult(0.0, 0.0, True, 0)
        raise ValueError("adaptive_simpson needs a <= b")

    evals = 0

    def feval(x):
        nonlocal evals
        evals += 1
        return f(x)

    fa, fb = feval(a), feval(b)
    m = 0.5 * (a + b)
    fm = feval(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    # stack entries: (a, m, b, fa, fm, fb, S, local_tol, depth)
    stack = [(a, m, b, fa, fm, fb, whole, tol, 0)]
    value = 0.0
    err = 0.0
    converged = True
    while stack:
        xa, xm, xb, ya, ym, yb, s, ltol, depth = stack.pop()
        lm = 0.5 * (xa + xm)
        rm = 0.5 * (xm + xb)
        ylm = feval(lm)
        yrm = feval(rm)
        sl = (xm - xa) / 6.0 * (ya + 4.0 * ylm + ym)
        sr = (xb - xm) / 6.0 * (ym + 4.0 * yrm + yb)
        delta = sl + sr - s
        if abs(delta) <= 15.0 * ltol or depth >= max_depth:
            value += sl + sr + delta / 15.0
            err += abs(delta) / 15.0
            if depth >= max_depth and abs(delta) > 15.0 * ltol:
                converged = False
        else:
            stack.append((xa, lm, xm, ya, ylm, ym, sl, 0.5 * ltol, depth + 1))
            stack.append((xm, rm, xb, ym, yrm, yb, sr, 0.5 * ltol, depth + 1))
    return QuadratureResult(value, err, converged, evals)
