"""Piecewise-C1 paths on [0,1] and the metric length functional."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .errors import ContractError, DegeneratePathError, DomainError
from .maps import HolomorphicMap
from .metrics import ConformalMetric
from .quadrature import adaptive_simpson


@dataclass(frozen=True)
class PathSpec:
    point: Callable
    velocity: Callable
    breakpoints: Tuple[float, ...] = ()

    def __post_init__(self):
        bad = [t for t in self.breakpoints if not 0.0 < t < 1.0]
        if bad or list(self.breakpoints) != sorted(self.breakpoints):
            raise ContractError(
                f"breakpoints must be sorted and interior, got {self.breakpoints!r}"
            )


@dataclass(frozen=True)
class PathLengthInfo:
    value: float
    error_estimate: float
    converged: bool
    evaluations: int


def line_segment(p: complex, q: complex) -> PathSpec:
    p, q = complex(p), complex(q)
    if p == q:
        raise DegeneratePathError("line segment needs distinct endpoints")
    v = q - p
    return PathSpec(point=lambda t: p + t * v, velocity=lambda t: v + 0j * t)


def circular_arc(center: complex, radius: float, angle0: float, angle1: float) -> PathSpec:
    if radius <= 0:
        raise DegeneratePathError("arc radius must be positive")
    if angle0 == angle1:
        raise DegeneratePathError("arc needs distinct angles")
    center = complex(center)
    span = angle1 - angle0

    def point(t):
        return center + radius * np.exp(1j * (angle0 + span * t))

    def velocity(t):
        return 1j * span * radius * np.exp(1j * (angle0 + span * t))

    return PathSpec(point=point, velocity=velocity)


def concat_paths(first: PathSpec, second: PathSpec) -> PathSpec:
    """Runs first on [0, 1/2] and second on [1/2, 1]; continuity required."""
    a, b = complex(first.point(1.0)), complex(second.point(0.0))
    if abs(a - b) > 1e-10:
        raise ContractError(f"paths do not join: {a!r} vs {b!r}")

    def point(t):
        return first.point(2 * t) if t < 0.5 else second.point(2 * t - 1)

    def velocity(t):
        return 2 * first.velocity(2 * t) if t < 0.5 else 2 * second.velocity(2 * t - 1)

    bps = tuple(0.5 * t for t in first.breakpoints) + (0.5,) + tuple(
        0.5 + 0.5 * t for t in second.breakpoints
    )
    return PathSpec(point=point, velocity=velocity, breakpoints=bps)


def map_path(f: HolomorphicMap, gamma: PathSpec) -> PathSpec:
    """The image path f(gamma) with chain-rule velocity."""
    return PathSpec(
        point=lambda t: f.eval(gamma.point(t)),
        velocity=lambda t: f.deriv(gamma.point(t)) * gamma.velocity(t),
        breakpoints=gamma.breakpoints,
    )


def reverse_path(gamma: PathSpec) -> PathSpec:
    return PathSpec(
        point=lambda t: gamma.point(1.0 - t),
        velocity=lambda t: -gamma.velocity(1.0 - t),
        breakpoints=tuple(sorted(1.0 - t for t in gamma.breakpoints)),
    )


def path_length(m: ConformalMetric, gamma: PathSpec, tol: float = 1e-9,
                full_output: bool = False):
    """Integral of sqrt(2 lambda(gamma(t))) |gamma'(t)| dt.

    Splits at the path's breakpoints first, then integrates each smooth piece
    adaptively. A singular density on the path shows up as a non-converged
    piece: the partial value is still returned, flagged through the info
    record (request it with full_output=True).
    """

    def integrand(t):
        z = gamma.point(t)
        if not bool(m.domain.contains(z)):
            raise DomainError(f"path leaves {m.domain.name} at t={t:g}, z={z!r}")
        lam = float(m.density(z))
        if lam < 0 or math.isnan(lam):
            raise DomainError(f"density invalid on path at t={t:g}")
        if math.isinf(lam):
            # let the adaptive routine see a huge finite spike instead of inf
            lam = 1e300
        return math.sqrt(2.0 * lam) * abs(gamma.velocity(t))

    cuts = [0.0, *gamma.breakpoints, 1.0]
    total = 0.0
    err = 0.0
    converged = True
    evals = 0
    n_pieces = len(cuts) - 1
    for k in range(n_pieces):
        res = adaptive_simpson(integrand, cuts[k], cuts[k + 1], tol / n_pieces)
        total += res.value
        err += res.error_estimate
        converged = converged and res.converged
        evals += res.evaluations
    info = PathLengthInfo(total, err, converged, evals)
    if full_output:
        return total, info
    return total
