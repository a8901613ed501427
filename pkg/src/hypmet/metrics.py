"""Conformal pseudometrics: densities, pullbacks, Gauss curvature.

Convention used throughout the package: a metric is ds^2 = 2 lambda |dz|^2
and objects store the density lambda, never the full coefficient 2 lambda.
The length element is sqrt(2 lambda(z)) |dz| and the Poincare density on
the disc of radius r is lambda(z) = 2 r^2 / (r^2 - |z|^2)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .domains import DomainDescriptor, disc_of_radius
from .errors import ContractError, DomainError
from .maps import HolomorphicMap
from .reporting import VerificationReport, make_report
from .sampling import disc_samples


@dataclass(frozen=True)
class ConformalMetric:
    density: Callable
    domain: DomainDescriptor
    analytic_curvature: Optional[Callable] = None
    zero_set: Tuple[complex, ...] = ()
    name: str = "metric"

    def __repr__(self):
        return f"ConformalMetric({self.name} on {self.domain.name})"


def poincare_metric(r: float = 1.0) -> ConformalMetric:
    """Density 2 r^2/(r^2-|z|^2)^2 on the disc of radius r; curvature -1."""
    if not (r > 0 and math.isfinite(r)):
        raise ContractError(f"disc radius must be positive and finite, got {r!r}")
    r2 = r * r
    dom = disc_of_radius(r)
    edge = r * (1.0 - 1e-12)

    def density(z):
        if np.any(np.abs(z) >= edge):
            raise DomainError(f"point outside the open disc of radius {r:g}")
        d = r2 - np.abs(z) ** 2
        return 2.0 * r2 / (d * d)

    return ConformalMetric(
        density=density,
        domain=dom,
        analytic_curvature=lambda z: np.abs(z) * 0.0 - 1.0,
        zero_set=(),
        name=f"poincare(r={r:g})",
    )


def constant_metric(c: float, domain: DomainDescriptor) -> ConformalMetric:
    if c < 0:
        raise ContractError("density constant must be nonnegative")

    return ConformalMetric(
        density=lambda z: np.abs(z) * 0.0 + c,
        domain=domain,
        analytic_curvature=(lambda z: np.abs(z) * 0.0) if c > 0 else None,
        zero_set=(),
        name=f"constant({c:g})",
    )


def pullback(m: ConformalMetric, f: HolomorphicMap) -> ConformalMetric:
    """The metric with density lambda(f(z)) |f'(z)|^2 on f's source.

    Zeros of f' join the zero set. Preimages of degeneracies of m itself are
    not discoverable generically and are not added.
    """
    if f.target.name != m.domain.name:
        raise ContractError(
            f"pullback target mismatch: map lands in {f.target.name}, "
            f"metric lives on {m.domain.name}"
        )

    def density(z):
        return m.density(f.eval(z)) * np.abs(f.deriv(z)) ** 2

    ac = None
    if m.analytic_curvature is not None:
        # curvature is invariant under holomorphic pullback off the zeros of f'
        ac = lambda z: m.analytic_curvature(f.eval(z))

    return ConformalMetric(
        density=density,
        domain=f.source,
        analytic_curvature=ac,
        zero_set=tuple(f.deriv_zeros),
        name=f"{f.name}^*({m.name})",
    )


def _fd_log_laplacian(logd: Callable, z: complex, h: float) -> float:
    center = logd(z)
    return (
        logd(z + h) + logd(z - h) + logd(z + 1j * h) + logd(z - 1j * h) - 4.0 * center
    ) / (h * h)


def gauss_curvature(m: ConformalMetric, z: complex, mode: str = "finite_difference",
                    step: Optional[float] = None) -> float:
    """K = -(1/lambda) * (1/4) * Laplacian(log lambda) at z.

    finite_difference mode uses a 5-point cross at steps h and h/2 with one
    Richardson extrapolation. Near a declared zero of the density (within
    10 h) the sentinel -inf is returned, since the curvature is undefined
    on the zero set and log lambda -> -inf there.
    """
    z = complex(z)
    if not bool(m.domain.contains(z)):
        raise DomainError(f"curvature point {z!r} outside {m.domain.name}")

    bd = float(m.domain.boundary_distance(z))
    if step is not None:
        h = float(step)
        if h <= 0:
            raise ContractError("step must be positive")
    else:
        h = 1e-4 if not math.isfinite(bd) else min(1e-4, bd / 10.0)
    if h <= 0:
        raise DomainError("point too close to the boundary for a stencil")

    if m.zero_set and min(abs(z - z0) for z0 in m.zero_set) < 10.0 * h:
        return -math.inf

    if mode == "analytic":
        if m.analytic_curvature is None:
            raise ContractError(f"{m.name} has no analytic curvature")
        return float(m.analytic_curvature(z))
    if mode != "finite_difference":
        raise ContractError(f"unknown curvature mode {mode!r}")

    stencil = [z + d for d in
               (h, -h, 1j * h, -1j * h, h / 2, -h / 2, 1j * h / 2, -1j * h / 2, 0)]
    for w in stencil:
        if not bool(m.domain.contains(w)):
            raise DomainError("finite-difference stencil leaves the domain")

    lam0 = float(m.density(z))
    if not (lam0 > 0 and math.isfinite(lam0)):
        raise DomainError(f"density not positive and finite at {z!r}")

    def logd(w):
        v = float(m.density(w))
        if not (v > 0 and math.isfinite(v)):
            raise DomainError(f"density not positive and finite at {w!r}")
        return math.log(v)

    lap_h = _fd_log_laplacian(logd, z, h)
    lap_h2 = _fd_log_laplacian(logd, z, h / 2)
    lap = (4.0 * lap_h2 - lap_h) / 3.0
    return -lap / (4.0 * lam0)


def verify_supporting(candidate: ConformalMetric, m: ConformalMetric, z0: complex,
                      radius: float, samples: int = 256, tol: float = 1e-9,
                      seed: int = 0) -> VerificationReport:
    """Checks candidate.density <= m.density on a disc around z0 with
    equality at z0, the touching-from-below relation used to transfer
    curvature bounds to non-smooth densities."""
    z0 = complex(z0)
    if radius <= 0:
        raise ContractError("supporting check needs a positive radius")
    pts = np.concatenate(([z0], disc_samples(samples, seed=seed, radius=radius,
                                             center=z0)))
    for dom in (candidate.domain, m.domain):
        inside = dom.contains(pts)
        if not np.all(inside):
            bad = pts[~np.asarray(inside)][0]
            raise DomainError(f"sample disc leaves {dom.name} at {bad!r}")

    cand = np.asarray(candidate.density(pts), dtype=float)
    base = np.asarray(m.density(pts), dtype=float)
    diff = cand - base
    k = int(np.argmax(diff))
    worst = max(float(diff[k]), abs(float(diff[0])))
    witness = pts[k] if diff[k] >= abs(diff[0]) else z0
    return make_report(
        check_name="supporting-pseudometric",
        params={"z0": z0, "radius": float(radius),
                "candidate": candidate.name, "metric": m.name},
        sample_count=len(pts),
        worst_violation=worst,
        worst_witness={"z": complex(witness)},
        tolerance=tol,
        seed=seed,
    )
