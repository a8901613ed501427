"""Closed-form hyperbolic distance, geodesics, and balls on the unit disc."""

from __future__ import annotations

import math
from typing import Tuple

import numpy as np

from .errors import DegeneratePathError, DomainError
from .mobius import mobius, mobius_derivative
from .paths import PathSpec


def _require_disc_points(*pts):
    for p in pts:
        if np.any(np.abs(p) >= 1.0):
            raise DomainError(f"point outside the open unit disc: {p!r}")


def mobius_distance(p, q):
    """mu(p, q) = |(p - q)/(1 - conj(q) p)|, a distance on the disc with
    values in [0, 1)."""
    _require_disc_points(p, q)
    val = np.abs((p - q) / (1.0 - np.conjugate(q) * p))
    return float(val) if np.ndim(val) == 0 else val


def poincare_distance_forms(p, q):
    """The three equivalent closed forms of the disc distance:
    log((n+m)/(n-m)), log((1+mu)/(1-mu)), 2 artanh(mu)."""
    _require_disc_points(p, q)
    n = np.abs(1.0 - np.conjugate(p) * q)
    m = np.abs(p - q)
    mu = m / n
    f1 = np.log((n + m) / (n - m))
    f2 = np.log((1.0 + mu) / (1.0 - mu))
    f3 = 2.0 * np.arctanh(mu)
    return f1, f2, f3


def poincare_distance(p, q):
    """rho(p, q) = 2 artanh |phi_p(q)| on the open unit disc."""
    _require_disc_points(p, q)
    mu = np.abs(p - q) / np.abs(1.0 - np.conjugate(p) * q)
    val = 2.0 * np.arctanh(mu)
    return float(val) if np.ndim(val) == 0 else val


def geodesic(p: complex, q: complex) -> PathSpec:
    """The unique geodesic from p to q: the chord from 0 to phi_p(q) pushed
    through the inverse Mobius map of p."""
    p, q = complex(p), complex(q)
    _require_disc_points(p, q)
    if p == q:
        raise DegeneratePathError("geodesic needs distinct endpoints")
    w = mobius(p, q)

    def point(t):
        return mobius(-p, t * w)

    def velocity(t):
        return mobius_derivative(-p, t * w) * w

    return PathSpec(point=point, velocity=velocity)


def poincare_ball(center: complex, radius: float) -> Tuple[complex, float]:
    """Euclidean (center, radius) of the hyperbolic ball.

    Hyperbolic balls are Euclidean discs: three points of the circle
    |w| = tanh(radius/2) are pushed through the Mobius map sending 0 to the
    center and their circumscribed circle is solved in closed form.
    """
    center = complex(center)
    _require_disc_points(center)
    if radius < 0:
        raise DomainError("ball radius must be nonnegative")
    if radius == 0:
        return center, 0.0
    t = math.tanh(radius / 2.0)
    a, b, c = (mobius(-center, t * w) for w in (1.0, 1.0j, -1.0))
    den = (
        np.conjugate(a) * (b - c)
        + np.conjugate(b) * (c - a)
        + np.conjugate(c) * (a - b)
    )
    num = (
        abs(a) ** 2 * (b - c)
        + abs(b) ** 2 * (c - a)
        + abs(c) ** 2 * (a - b)
    )
    o = num / den
    return complex(o), float(abs(a - o))


def inner_length(d, gamma: PathSpec, depth: int) -> float:
    """Supremum of sums d(gamma(t_{k-1}), gamma(t_k)) over dyadic partitions,
    approximated at 2**depth pieces."""
    if depth < 0 or depth > 22:
        raise ValueError("depth must be between 0 and 22")
    n = 2**depth
    ts = np.linspace(0.0, 1.0, n + 1)
    pts = [gamma.point(t) for t in ts]
    return float(sum(d(pts[k], pts[k + 1]) for k in range(n)))
