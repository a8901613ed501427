"""An explicit complete conformal metric on the twice punctured plane.

The density is

    lam(z) = 4 (1 + |z|^2) / ( |z|^2 |z-1|^2 A1(z)^2 A2(z)^2 A3(z)^2 )

    A1 = log( C |z|^2   / (1 + |z|^2) )
    A2 = log( C |z-1|^2 / (2 (1 + |z|^2)) )
    A3 = log( C         / (1 + |z|^2) )

with a constant C > 9 calibrated so the Gauss curvature stays below -1 on a
grid hugging 0, 1, infinity and the bulk. The metric is complete toward all
three ends (the completeness probes measure the iterated-log growth), and it
powers the quantitative consequences in this module: Ahlfors contraction
checks, a little-Picard derivative bound, Landau and Schottky bounds.

Numerical notes. Everything is computed through the bounded factors
us = |z|^2/(1+|z|^2), ut = |z-1|^2/(1+|z|^2), u1 = 1/(1+|z|^2), which keep
intermediates in a safe floating range; for |z| > 1e8 evaluation routes
through the chart w = 1/z with the conformal transformation law (z -> 1/z is
an exact isometry of the density, swapping A1 and A3). The circles where an
A_i vanishes carry infinite density; they are genuine infinite-distance
barriers of the metric, and the strict scalar entry points refuse them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import ndimage
from scipy.spatial import cKDTree

from .distances import poincare_distance
from .domains import (DomainDescriptor, complex_plane, twice_punctured_plane,
                      unit_disc)
from .errors import CalibrationError, ContractError, DomainError
from .maps import HolomorphicMap, affine_map, holomorphic_map, polynomial_map
from .mesh import build_metric_mesh, multi_source_ball_extents
from .metrics import ConformalMetric, verify_supporting
from .mobius import is_point_at_infinity
from .quadrature import adaptive_simpson
from .reporting import VerificationReport, make_report
from .sampling import disc_samples

_CHART_RADIUS = 1e8
CURVATURE_MARGIN = 1e-3
DEFAULT_C_CANDIDATES = (9.5, 10.0, 12.0, 16.0, 24.0, 32.0, 48.0, 64.0)
# smallest candidate passing the default certificate; reproduce via calibrate_C()
DEFAULT_C = 16.0


@dataclass(frozen=True)
class PpcMetricParams:
    """Constant of the twice-punctured-plane density, optionally certified.

    A certificate records the curvature sweep that selected C: the grid size,
    the margin, and the worst sampled curvature (which must be < -1 - margin).
    """
    C: float
    certificate: Optional[dict] = None

    def __post_init__(self):
        if not self.C > 9.0:
            raise DomainError(f"C must exceed 9, got {self.C!r}")


def _raw_density(z: np.ndarray, C: float) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    s = np.abs(z) ** 2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        us = s / (1.0 + s)
        ut = np.abs(z - 1.0) ** 2 / (1.0 + s)
        u1 = 1.0 / (1.0 + s)
        A1 = np.log(C * us)
        A2 = np.log(C * ut / 2.0)
        A3 = np.log(C * u1)
        lam = 4.0 / (us * ut * (1.0 + s) * (A1 * A2 * A3) ** 2)
    return lam


def _raw_curvature(z: np.ndarray, C: float) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    s = np.abs(z) ** 2
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        us = s / (1.0 + s)
        ut = np.abs(z - 1.0) ** 2 / (1.0 + s)
        u1 = 1.0 / (1.0 + s)
        up = np.abs(z + 1.0) ** 2 / (1.0 + s)
        A1 = np.log(C * us)
        A2 = np.log(C * ut / 2.0)
        A3 = np.log(C * u1)
        T1 = 0.25 * us * ut * u1 * (A1 * A2 * A3) ** 2
        T2 = 0.5 * ut * (A2 * A3) ** 2 * u1 * (u1 + us * A1)
        T3 = 0.5 * us * (A1 * A3) ** 2 * u1 * (up + ut * A2)
        T4 = 0.5 * us * ut * (A1 * A2) ** 2 * (us + A3 * u1)
    return -(T1 + T2 + T3 + T4)


def _density_scalar(z: complex, C: float) -> float:
    # math-module fast path for quadrature loops
    s = z.real * z.real + z.imag * z.imag
    us = s / (1.0 + s)
    ut = abs(z - 1.0) ** 2 / (1.0 + s)
    u1 = 1.0 / (1.0 + s)
    if us == 0.0 or ut == 0.0:
        return math.inf
    A1 = math.log(C * us)
    A2 = math.log(C * ut / 2.0)
    A3 = math.log(C * u1)
    den = us * ut * (1.0 + s) * (A1 * A2 * A3) ** 2
    if den == 0.0:
        return math.inf
    return 4.0 / den


def ppc_density_grid(z, params: PpcMetricParams):
    """Vectorized permissive density: +inf at the punctures and on the
    singular circles, never an exception. Meant for meshes and sweeps."""
    arr = np.atleast_1d(np.asarray(z, dtype=complex))
    lam = _raw_density(arr, params.C)
    far = np.abs(arr) > _CHART_RADIUS
    if far.any():
        w = 1.0 / arr[far]
        ws = np.abs(w) ** 2
        lam[far] = (_raw_density(w, params.C) * ws) * ws
    lam = np.where(np.isfinite(lam), lam, np.inf)
    return lam if np.ndim(z) else float(lam[0])


def ppc_curvature_grid(z, params: PpcMetricParams):
    """Vectorized closed-form curvature; -inf where the formula degenerates
    (only at the punctures themselves)."""
    arr = np.atleast_1d(np.asarray(z, dtype=complex))
    K = _raw_curvature(arr, params.C)
    far = np.abs(arr) > _CHART_RADIUS
    if far.any():
        K[far] = _raw_curvature(1.0 / arr[far], params.C)
    K = np.where(np.isnan(K), -np.inf, K)
    return K if np.ndim(z) else float(K[0])


def _check_not_puncture(zc: complex):
    if is_point_at_infinity(zc) or not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
        raise DomainError("infinity is a puncture of the twice punctured plane")
    if zc == 0.0 or zc == 1.0:
        raise DomainError("z = 0 and z = 1 are punctures")


def ppc_density(z, params: PpcMetricParams) -> float:
    """Strict scalar density; raises instead of returning inf/nan."""
    zc = complex(z)
    _check_not_puncture(zc)
    if abs(zc) > _CHART_RADIUS:
        w = 1.0 / zc
        ws = abs(w) ** 2
        return (ppc_density(w, params) * ws) * ws
    lam = _density_scalar(zc, params.C)
    if not math.isfinite(lam) or lam <= 0.0:
        raise CalibrationError(
            f"density is singular at z = {zc!r}: a log factor vanishes there")
    return lam


def ppc_curvature(z, params: PpcMetricParams) -> float:
    """Strict scalar closed-form Gauss curvature of the density."""
    zc = complex(z)
    _check_not_puncture(zc)
    if abs(zc) > _CHART_RADIUS:
        return ppc_curvature(1.0 / zc, params)
    K = float(_raw_curvature(np.asarray(zc), params.C))
    if not math.isfinite(K):
        raise CalibrationError(f"curvature degenerates at z = {zc!r}")
    return K


def curvature_limits(params: PpcMetricParams) -> Dict[str, float]:
    """Limit values of the closed-form curvature at the three ends."""
    C = params.C
    end = -0.5 * math.log(C / 2.0) ** 2 * math.log(C) ** 2
    return {"zero": end, "one": -0.25 * math.log(C / 2.0) ** 4, "infinity": end}


def ppc_metric(params: PpcMetricParams) -> ConformalMetric:
    dom = twice_punctured_plane()
    return ConformalMetric(
        density=lambda z, _p=params: ppc_density_grid(z, _p),
        domain=dom,
        analytic_curvature=lambda z, _p=params: ppc_curvature_grid(z, _p),
        zero_set=(),
        name=f"ppc(C={params.C:g})",
    )


def default_calibration_grid() -> np.ndarray:
    """Annuli around 0 and 1, a log-spaced far ring, and a bulk rectangle
    minus small puncture discs. 31615 points."""
    ang = np.exp(2j * np.pi * np.arange(32) / 32)
    rad = np.logspace(-6, -1, 26)
    parts = []
    for a in (0.0, 1.0):
        parts.append((a + rad[:, None] * ang[None, :]).ravel())
    rinf = np.logspace(1, 6, 26)
    parts.append((rinf[:, None] * ang[None, :]).ravel())
    xs = np.arange(-4.0, 5.0 + 1e-9, 0.05)
    ys = np.arange(-4.0, 4.0 + 1e-9, 0.05)
    X, Y = np.meshgrid(xs, ys)
    Z = (X + 1j * Y).ravel()
    keep = (np.abs(Z) > 0.1) & (np.abs(Z - 1.0) > 0.1)
    parts.append(Z[keep])
    return np.concatenate(parts)


def calibrate_C(search_range: Optional[Tuple[float, float]] = None,
                grid: Optional[np.ndarray] = None,
                candidates: Optional[Sequence[float]] = None) -> PpcMetricParams:
    """Smallest candidate C whose closed-form curvature stays below
    -1 - margin on the whole calibration grid; returns certified params."""
    cand = [float(c) for c in (candidates if candidates is not None
                               else DEFAULT_C_CANDIDATES)]
    if search_range is not None:
        lo, hi = float(search_range[0]), float(search_range[1])
        cand = [c for c in cand if lo <= c <= hi]
    cand.sort()
    if not cand:
        raise CalibrationError("the search range contains no candidate C")
    if any(c <= 9.0 for c in cand):
        raise DomainError("the search must stay above C = 9")
    pts = default_calibration_grid() if grid is None else np.asarray(grid, dtype=complex)
    tried: List[dict] = []
    for C in cand:
        K = _raw_curvature(pts, C)
        K = np.where(np.isfinite(K), K, -np.inf)
        i = int(np.argmax(K))
        ok = bool(K[i] < -1.0 - CURVATURE_MARGIN)
        tried.append({"C": C, "max_curvature": float(K[i]),
                      "argmax_point": complex(pts[i]), "pass": ok})
        if ok:
            cert = {
                "C": C,
                "margin": CURVATURE_MARGIN,
                "max_curvature": float(K[i]),
                "argmax_point": complex(pts[i]),
                "sample_count": int(pts.size),
                "grid": "default-v1" if grid is None else "custom",
                "candidates_tried": tried,
            }
            return PpcMetricParams(C=C, certificate=cert)
    worst = min(tried, key=lambda rec: rec["max_curvature"])
    raise CalibrationError(
        "no candidate passed the curvature certificate; closest was "
        f"C={worst['C']:g} with max K = {worst['max_curvature']:.6f} "
        f"at z = {worst['argmax_point']:.6g}")


# --------------------------------------------------------------------------
# completeness probes


@dataclass(frozen=True)
class GrowthReport:
    """Partial lengths along a boundary-bound path plus an iterated-log fit.

    t_samples pairs (t, cumulative length); divergence_flag is true when the
    fitted slope against log|A_active| is positive and the length increments
    do not collapse (so the growth persists, not just the fit).
    """
    target: str
    t_samples: Tuple[Tuple[float, float], ...]
    divergence_flag: bool
    fitted_growth: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        vals = [v for _, v in self.t_samples]
        if any(b < a - 1e-12 for a, b in zip(vals, vals[1:])):
            raise ContractError("partial lengths must be nondecreasing")


_PERSISTENCE_FACTOR = 0.15


def _growth_fit(xs, lengths) -> Tuple[Dict[str, float], bool]:
    xs = np.asarray(xs, dtype=float)
    lengths = np.asarray(lengths, dtype=float)
    n = lengths.size
    i0 = max(0, int(math.ceil(0.4 * n)))
    if n - i0 < 3:
        i0 = max(0, n - 3)
    xw, yw = xs[i0:], lengths[i0:]
    slope, intercept = np.polyfit(xw, yw, 1)
    resid = yw - (intercept + slope * xw)
    rng = float(np.max(yw) - np.min(yw))
    rel = float(np.sqrt(np.mean(resid ** 2)) / rng) if rng > 0 else 0.0
    d = np.diff(lengths)
    third = max(1, d.size // 3)
    early = float(np.median(d[:third]))
    late = float(np.median(d[-third:]))
    persistent = late > max(1e-9, _PERSISTENCE_FACTOR * early)
    fit = {
        "model": "L ~ a + b*log|A_active|",
        "intercept": float(intercept),
        "slope": float(slope),
        "residual_rel_rms": rel,
        "window_start": i0,
        "milestones": int(n),
        "increment_early_median": early,
        "increment_late_median": late,
    }
    return fit, bool(slope > 0.0) and persistent


def _canonical_target(target) -> str:
    if isinstance(target, str):
        t = target.strip().lower()
        if t in ("0", "zero"):
            return "0"
        if t in ("1", "one"):
            return "1"
        if t in ("inf", "infty", "infinity"):
            return "infinity"
        raise DomainError(f"unknown probe target {target!r}")
    if isinstance(target, complex) and is_point_at_infinity(target):
        return "infinity"
    if isinstance(target, float) and math.isinf(target):
        return "infinity"
    if target == 0:
        return "0"
    if target == 1:
        return "1"
    raise DomainError(f"unknown probe target {target!r}")


def completeness_probe(params: PpcMetricParams, target,
                       t_max: float = 1.0 - 1e-10) -> GrowthReport:
    """Cumulative metric length along a radial path running into a puncture
    (or out to infinity), milestones every half decade of 1 - t."""
    name = _canonical_target(target)
    if not 0.0 < t_max < 1.0:
        raise DomainError("t_max must lie in (0, 1)")
    C = params.C
    if name == "0":
        # start inside the circle where A1 changes sign, half way in
        r0 = 0.5 / math.sqrt(C - 1.0)
        point = lambda r: complex(r, 0.0)
        A_active = lambda r: math.log(C * r * r / (1.0 + r * r))
        outward = False
    elif name == "1":
        # start half way between 1 and the near rim of the A2 circle
        m = C / (C - 2.0)
        x_min = m - math.sqrt(m * m - 1.0)
        r0 = 0.5 * (1.0 - x_min)
        point = lambda r: complex(1.0 - r, 0.0)
        A_active = lambda r: math.log(C * r * r / (2.0 * (1.0 + (1.0 - r) ** 2)))
        outward = False
    else:
        # start outside the circle where A3 changes sign, twice as far out
        r0 = 2.0 * math.sqrt(C - 1.0)
        point = lambda r: complex(r, 0.0)
        A_active = lambda r: math.log(C / (1.0 + r * r))
        outward = True

    def integrand(u: float) -> float:
        r = math.exp(u)
        lam = _density_scalar(point(r), C)
        return math.sqrt(2.0 * lam) * r

    decades = -math.log10(1.0 - t_max)
    n_mile = max(2, int(math.floor(2.0 * decades + 1e-9)))
    radii = [r0 * 10.0 ** (0.5 * k if outward else -0.5 * k)
             for k in range(n_mile + 1)]
    samples = [(0.0, 0.0)]
    total = 0.0
    for k in range(1, n_mile + 1):
        ua, ub = math.log(radii[k - 1]), math.log(radii[k])
        res = adaptive_simpson(integrand, min(ua, ub), max(ua, ub), tol=1e-10)
        total += res.value
        samples.append((1.0 - 10.0 ** (-0.5 * k), total))
    xs = [math.log(abs(A_active(r))) for r in radii]
    fit, flag = _growth_fit(xs, [v for _, v in samples])
    return GrowthReport(target=name, t_samples=tuple(samples),
                        divergence_flag=flag, fitted_growth=fit)


def euclidean_control_probe(t_max: float = 1.0 - 1e-10) -> GrowthReport:
    """Same milestone machinery for the flat half-density on the unit disc
    along a path to the boundary: the cumulative length stays bounded and
    the divergence flag must come out False."""
    if not 0.0 < t_max < 1.0:
        raise DomainError("t_max must lie in (0, 1)")
    r0 = 0.5
    decades = -math.log10(1.0 - t_max)
    n_mile = max(2, int(math.floor(2.0 * decades + 1e-9)))
    radii = [r0 * 10.0 ** (-0.5 * k) for k in range(n_mile + 1)]

    def integrand(u: float) -> float:
        # sqrt(2 * 1/2) * r = r
        return math.exp(u)

    samples = [(0.0, 0.0)]
    total = 0.0
    for k in range(1, n_mile + 1):
        ua, ub = math.log(radii[k]), math.log(radii[k - 1])
        res = adaptive_simpson(integrand, ua, ub, tol=1e-12)
        total += res.value
        samples.append((1.0 - 10.0 ** (-0.5 * k), total))
    xs = [math.log(abs(math.log(r))) for r in radii]
    fit, flag = _growth_fit(xs, [v for _, v in samples])
    fit["model"] = "L ~ a + b*log|log r| (control)"
    return GrowthReport(target="control", t_samples=tuple(samples),
                        divergence_flag=flag, fitted_growth=fit)


# --------------------------------------------------------------------------
# Ahlfors contraction and the quantitative consequences


def ahlfors_check(m: ConformalMetric, curvature_bound: float, f: HolomorphicMap,
                  samples: int = 400, seed: int = 0,
                  tol: float = 1e-6) -> VerificationReport:
    """2 lam(f(z)) |f'(z)|^2 <= |L|^{-1} 4/(1-|z|^2)^2 over disc samples,
    where L = curvature_bound certifies K_m <= L < 0.

    The curvature hypothesis is itself sampled first when the metric carries
    an analytic curvature; a failure there is reported as stage="hypothesis"
    rather than as a violation of the conclusion.
    """
    if not curvature_bound < 0.0:
        raise DomainError("curvature bound must be negative")
    z = disc_samples(samples, seed=seed)
    w = np.asarray(f.eval(z))
    if m.analytic_curvature is not None:
        Kw = np.broadcast_to(np.asarray(m.analytic_curvature(w), dtype=float),
                             w.shape)
        hyp = Kw - curvature_bound
        k = int(np.argmax(hyp))
        if hyp[k] > 1e-9 * (1.0 + abs(curvature_bound)):
            return make_report(
                check_name="ahlfors-hypothesis",
                params={"map": f.name, "metric": m.name, "stage": "hypothesis",
                        "curvature_bound": curvature_bound},
                sample_count=int(z.size),
                worst_violation=float(hyp[k]),
                worst_witness={"z": complex(z[k]), "f(z)": complex(w[k]),
                               "curvature": float(Kw[k])},
                tolerance=0.0,
                seed=seed,
            )
    lhs = 2.0 * np.asarray(m.density(w), dtype=float) * np.abs(np.asarray(f.deriv(z))) ** 2
    rhs = (1.0 / abs(curvature_bound)) * 4.0 / (1.0 - np.abs(z) ** 2) ** 2
    viol = lhs - rhs
    k = int(np.argmax(viol))
    return make_report(
        check_name="ahlfors",
        params={"map": f.name, "metric": m.name,
                "curvature_bound": curvature_bound},
        sample_count=int(z.size),
        worst_violation=float(viol[k]),
        worst_witness={"z": complex(z[k]), "f(z)": complex(w[k])},
        tolerance=tol,
        seed=seed,
    )


def little_picard_derivative_bound(f: HolomorphicMap, z0: complex, r: float,
                                   params: PpcMetricParams,
                                   tol: float = 1e-9) -> float:
    """Bound 2/(r * lam(f(z0))) on |f'(z0)| for maps of the r-disc about z0
    into the twice punctured plane; verified against f before returning."""
    z0 = complex(z0)
    if not r > 0.0:
        raise DomainError("the disc radius must be positive")
    theta = 2.0 * np.pi * np.arange(64) / 64
    ring = np.concatenate([z0 + 0.5 * r * np.exp(1j * theta),
                           z0 + 0.999 * r * np.exp(1j * theta)])
    w = np.asarray(f.eval(ring))
    clearance = min(float(np.min(np.abs(w))), float(np.min(np.abs(w - 1.0))))
    if clearance < 1e-9:
        raise DomainError(
            f"image of {f.name} touches a puncture (clearance {clearance:.3g})")
    bound = 2.0 / (r * ppc_density(complex(f.eval(z0)), params))
    actual = abs(complex(f.deriv(z0)))
    if actual > bound + tol:
        raise ContractError(
            f"derivative bound violated for {f.name}: |f'({z0:g})| = "
            f"{actual:.6g} > {bound:.6g}")
    return bound


def landau_radius_bound(a0: complex, a1: complex,
                        params: PpcMetricParams) -> float:
    """Largest disc radius 2/(|a1| lam(a0)) compatible with a map into the
    twice punctured plane having f(0) = a0, f'(0) = a1."""
    a1c = complex(a1)
    if a1c == 0.0:
        raise DomainError("the Landau bound requires a nonzero derivative")
    return 2.0 / (abs(a1c) * ppc_density(a0, params))


def schottky_base_points(C_mag: float) -> List[complex]:
    """Polar sample of base points |a| < C_mag for the Schottky sweep:
    8 angles x radii {0.25, 0.5, 0.75} C_mag, puncture neighborhoods removed,
    conjugates dropped (the density is symmetric under z -> conj(z))."""
    pts: List[complex] = []
    for k in range(8):
        a = np.exp(2j * np.pi * k / 8)
        for frac in (0.25, 0.5, 0.75):
            p = complex(frac * C_mag * a)
            if abs(p) < 0.05 or abs(p - 1.0) < 0.05:
                continue
            if p.imag < -1e-12:
                continue
            pts.append(p)
    return pts


def schottky_bound(R: float, r: float, C_mag: float, params: PpcMetricParams,
                   resolution: float = 0.02) -> float:
    """Uniform bound M with |f(z)| <= M on |z| <= r for every holomorphic
    f from the R-disc into the twice punctured plane with |f(0)| < C_mag.

    M = C_mag + M1 where M1 is the largest Euclidean reach of the metric
    ball of radius rho(0, r/R) around sampled base points a = f(0).
    """
    if not (R > 0.0 and 0.0 <= r < R):
        raise DomainError("need 0 <= r < R")
    if not C_mag > 0.0:
        raise DomainError("C_mag must be positive")
    if r == 0.0:
        return float(C_mag)
    rp = float(poincare_distance(0.0 + 0j, complex(r / R)))
    centers = schottky_base_points(C_mag)
    half = max(math.sqrt(params.C - 1.0) + 1.0, C_mag + 1.0)
    mesh = build_metric_mesh(ppc_metric(params), twice_punctured_plane(),
                             resolution, box=(-half, half, -half, half))
    extents = multi_source_ball_extents(mesh, centers, rp)
    return float(C_mag + np.max(extents))


# --------------------------------------------------------------------------
# Landau / Bloch radius estimators


def _require_normalized(f: HolomorphicMap, tol: float = 1e-6):
    d0 = abs(complex(f.deriv(0j)))
    if abs(d0 - 1.0) > tol:
        raise ContractError(
            f"map {f.name} is not normalized: |f'(0)| = {d0:.8g}")


def _image_boundary(f: HolomorphicMap, n: int) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(n) / n
    return np.asarray(f.eval(np.exp(1j * theta)))


def _interior_grid(step: float):
    ax = np.arange(-1.0 + step, 1.0 - 0.5 * step, step)
    X, Y = np.meshgrid(ax, ax, indexing="ij")
    Z = X + 1j * Y
    inside = np.abs(Z) <= 1.0 - step
    return Z, inside


def _min_boundary_dist(w: np.ndarray, boundary: np.ndarray,
                       chunk: int = 1024) -> np.ndarray:
    out = np.empty(w.size, dtype=float)
    for i in range(0, w.size, chunk):
        blk = w[i:i + chunk]
        out[i:i + chunk] = np.min(np.abs(blk[:, None] - boundary[None, :]), axis=1)
    return out


def landau_radius_estimate(f: HolomorphicMap, boundary_samples: int = 4096,
                           grid_step: float = 0.02) -> float:
    """Radius of the largest disc contained in f of the unit disc, estimated
    as max over interior image points of the distance to the sampled image
    of the unit circle (which contains the image boundary)."""
    _require_normalized(f)
    Z, inside = _interior_grid(grid_step)
    w = np.asarray(f.eval(Z[inside]))
    boundary = _image_boundary(f, boundary_samples)
    return float(np.max(_min_boundary_dist(w, boundary)))


def _component_injective(Z, W, inside, ij, s: float, step: float) -> bool:
    """True when no well-separated pair of grid points in the f-preimage
    component of D_s(W[ij]) lands on nearly the same value."""
    if s <= 0.0:
        return True
    w0 = W[ij]
    with np.errstate(invalid="ignore"):
        mask = inside & (np.abs(W - w0) < s)
    if not mask[ij]:
        return True
    labels, _ = ndimage.label(mask)
    comp = labels == labels[ij]
    zs = Z[comp]
    ws = W[comp]
    if zs.size < 2:
        return True
    tree = cKDTree(np.column_stack([ws.real, ws.imag]))
    pairs = tree.query_pairs(0.3 * step, output_type="ndarray")
    if pairs.size == 0:
        return True
    sep = np.abs(zs[pairs[:, 0]] - zs[pairs[:, 1]])
    return not bool(np.any(sep > 3.0 * step))


def bloch_radius_estimate(f: HolomorphicMap, grid_step: float = 0.02,
                          boundary_samples: int = 4096) -> float:
    """Largest radius found for a disc in the image onto which f restricts
    injectively (on the preimage component of its center): candidate centers
    are the deepest interior image points, the radius is bisected against a
    pairwise-collision test on the grid."""
    _require_normalized(f)
    Z, inside = _interior_grid(grid_step)
    W = np.full(Z.shape, np.nan, dtype=complex)
    W[inside] = f.eval(Z[inside])
    boundary = _image_boundary(f, boundary_samples)
    depth = np.full(Z.shape, -np.inf)
    depth[inside] = _min_boundary_dist(W[inside], boundary)

    flat = np.argsort(depth.ravel())[::-1]
    cands: List[tuple] = []
    for idx in flat:
        dv = depth.ravel()[idx]
        if dv <= 0.0:
            break
        zc = Z.ravel()[idx]
        if all(abs(zc - prev) >= 0.25 for prev, _, _ in cands):
            cands.append((zc, np.unravel_index(idx, Z.shape), float(dv)))
        if len(cands) == 6:
            break

    best = 0.0
    for _, ij, hi in cands:
        if hi <= best:
            continue
        if _component_injective(Z, W, inside, ij, hi, grid_step):
            best = max(best, hi)
            continue
        lo = 0.0
        for _ in range(18):
            mid = 0.5 * (lo + hi)
            if _component_injective(Z, W, inside, ij, mid, grid_step):
                lo = mid
            else:
                hi = mid
        best = max(best, lo)
    return float(best)


def bloch_metric_density(f: HolomorphicMap, A: float, z: complex,
                         schlicht_radius: Callable[[complex], float]) -> float:
    """A^2 |f'(z)|^2 / (2 rho (A^2 - rho)^2) with rho the schlicht radius of
    the image point; meaningful on the window rho < A^2/3 where x(A^2-x)^2
    is increasing."""
    zc = complex(z)
    w = complex(f.eval(zc))
    fp = abs(complex(f.deriv(zc)))
    rho = float(schlicht_radius(w))
    if rho < 0.0:
        raise ContractError("schlicht radius must be nonnegative")
    if rho == 0.0:
        if fp > 0.0:
            raise ContractError(
                "schlicht radius vanished at a point with f'(z) != 0")
        return 0.0
    if not A * A > 3.0 * rho:
        raise DomainError(
            f"outside the monotonicity window: need A^2 > 3 rho, got "
            f"A^2 = {A * A:.6g}, rho = {rho:.6g}")
    return (A * A * fp * fp) / (2.0 * rho * (A * A - rho) ** 2)


# --------------------------------------------------------------------------
# supporting metrics for the Landau construction


def landau_point_metric(s0: complex, C: float) -> ConformalMetric:
    """Density 1/(2 (|w-s0| log(C/|w-s0|))^2) around a boundary point s0.

    Its Gauss curvature is exactly -1 wherever defined; the domain is
    restricted to 0 < |w-s0| < C/e, the window on which x log(C/x) is
    increasing, so the density can support boundary-distance densities from
    below."""
    s0c = complex(s0)
    if not C > 0.0:
        raise DomainError("C must be positive")
    rmax = C / math.e

    def contains(z):
        rz = np.abs(np.asarray(z, dtype=complex) - s0c)
        return (rz > 0.0) & (rz < rmax)

    def bdist(z):
        rz = np.abs(np.asarray(z, dtype=complex) - s0c)
        return np.minimum(rz, rmax - rz)

    dom = DomainDescriptor(
        contains=contains,
        boundary_distance=bdist,
        punctures=(s0c,),
        name=f"log-window({s0c:g})",
        bounding_box=(s0c.real - rmax, s0c.real + rmax,
                      s0c.imag - rmax, s0c.imag + rmax),
    )

    def dens(z):
        rz = np.abs(np.asarray(z, dtype=complex) - s0c)
        with np.errstate(divide="ignore", invalid="ignore"):
            lam = 0.5 / (rz * np.log(C / rz)) ** 2
        return lam

    return ConformalMetric(
        density=dens,
        domain=dom,
        analytic_curvature=lambda z: -1.0 + 0.0 * np.abs(np.asarray(z)),
        zero_set=(),
        name=f"log-point({s0c:g}, C={C:g})",
    )


def landau_target_metric(omega: DomainDescriptor, C: float) -> ConformalMetric:
    """Density 1/(2 (d log(C/d))^2) with d the boundary distance of omega."""
    if not C > 0.0:
        raise DomainError("C must be positive")

    def dens(z):
        d = np.asarray(omega.boundary_distance(np.asarray(z, dtype=complex)),
                       dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            lam = 0.5 / (d * np.log(C / d)) ** 2
        return lam

    return ConformalMetric(density=dens, domain=omega, analytic_curvature=None,
                           zero_set=(), name=f"boundary-log({omega.name}, C={C:g})")


def landau_supporting_check(C: float = 5.0, z0: complex = 0.3 + 0j,
                            s0: complex = 1.0 + 0j, radius: float = 0.25,
                            samples: int = 256, seed: int = 0,
                            landau_radius: float = 1.0) -> VerificationReport:
    """The point density at s0 supports the boundary-distance density of the
    unit disc from below near z0 (equality at z0, since s0 is the nearest
    boundary point). Valid on the window e * L < C."""
    window_ok = math.e * landau_radius < C
    if not window_ok:
        return make_report(
            check_name="landau-supporting",
            params={"stage": "window", "C": C, "landau_radius": landau_radius},
            sample_count=0,
            worst_violation=math.inf,
            worst_witness={"z": complex(z0)},
            tolerance=0.0,
            seed=seed,
        )
    omega = unit_disc()
    candidate = landau_point_metric(s0, C)
    target = landau_target_metric(omega, C)
    rep = verify_supporting(candidate, target, complex(z0), radius,
                            samples=samples, seed=seed)
    return replace(rep, check_name="landau-supporting",
                   params={**dict(rep.params), "C": C, "s0": complex(s0),
                           "window_e_L_below_C": window_ok})


# --------------------------------------------------------------------------
# catalogs


_AHLFORS_AFFINE: Tuple[Tuple[complex, complex], ...] = (
    (3.0 + 0j, 0.5 + 0j),
    (3.0 + 0j, 0.25 + 0j),
    (-2.0 + 0j, 1.0 + 0j),
    (2j, 0.8 + 0j),
    (-1.0 - 1j, 0.5 + 0j),
    (0.6j, 0.2 + 0j),
    (-3.0 + 0j, 0.5 + 0j),
    (2.5j, 0.5 + 0j),
    (-2.5 + 0j, 0.4 + 0j),
    (2.0 + 2j, 0.5 + 0j),
)


def _affine_name(a: complex, b: complex) -> str:
    return f"{a:g}+{b:g}z"


def ahlfors_witnesses(params: Optional[PpcMetricParams] = None) -> List[HolomorphicMap]:
    """Affine maps of the disc into the twice punctured plane whose images
    keep clear of the singular circles of the default calibration, so the
    contraction inequality is testable pointwise along them."""
    disc = unit_disc()
    tpp = twice_punctured_plane()
    return [affine_map(a, b, disc, tpp, name=_affine_name(a, b))
            for a, b in _AHLFORS_AFFINE]


def landau_bloch_catalog() -> List[HolomorphicMap]:
    """Normalized maps (|f'(0)| = 1) on the closed disc for the radius
    estimators."""
    disc = unit_disc()
    plane = complex_plane()
    rot = complex(np.exp(0.25j * np.pi))
    return [
        affine_map(0.0, 1.0, disc, plane, name="z"),
        affine_map(0.0, rot, disc, plane, name="e^(i pi/4) z"),
        polynomial_map([0.0, 1.0, 0.1], disc, plane, name="z+0.1z^2"),
        polynomial_map([0.0, 1.0, 0.05], disc, plane, name="z+0.05z^2"),
        holomorphic_map(lambda z: np.exp(z) - 1.0, np.exp, disc, plane,
                        (), "exp(z)-1"),
        holomorphic_map(np.sin, np.cos, disc, plane, (), "sin(z)"),
        holomorphic_map(lambda z: z / (1.0 - z / 3.0),
                        lambda z: 1.0 / (1.0 - z / 3.0) ** 2, disc, plane,
                        (), "z/(1-z/3)"),
    ]


def schottky_witnesses() -> List[HolomorphicMap]:
    """Maps of the unit disc into the twice punctured plane with |f(0)| < 4,
    for checking domination by the computed Schottky bound."""
    disc = unit_disc()
    tpp = twice_punctured_plane()
    wits = [
        affine_map(3.0, 1.0, disc, tpp, name="3+z"),
        affine_map(3.0, 0.5, disc, tpp, name="3+z/2"),
        affine_map(-2.0, 1.0, disc, tpp, name="-2+z"),
        affine_map(2j, 0.8, disc, tpp, name="2i+0.8z"),
        affine_map(-1.0 - 1j, 0.5, disc, tpp, name="-1-i+0.5z"),
        affine_map(0.4j, 0.15, disc, tpp, name="0.4i+0.15z"),
        holomorphic_map(lambda z: np.exp(0.5 * z) + 2.0,
                        lambda z: 0.5 * np.exp(0.5 * z), disc, tpp,
                        (), "exp(z/2)+2"),
        polynomial_map([2.5, 0.0, 0.5], disc, tpp, name="2.5+0.5z^2"),
        affine_map(-2.5, 0.4, disc, tpp, name="-2.5+0.4z"),
        affine_map(1.8j, -0.4, disc, tpp, name="1.8i-0.4z"),
    ]
    return wits
