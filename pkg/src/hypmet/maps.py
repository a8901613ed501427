"""Holomorphic maps as (eval, deriv) callable pairs with domain tags.

Constructors cover everything the verification suites need: affine maps,
polynomials, disc automorphisms, Blaschke products, composition. All eval
and deriv callables broadcast over numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Tuple

import numpy as np

from .domains import DomainDescriptor, unit_disc
from .errors import ContractError
from .mobius import DiscAutomorphism, apply_automorphism, mobius, mobius_derivative


@dataclass(frozen=True)
class HolomorphicMap:
    eval: Callable
    deriv: Callable
    source: DomainDescriptor
    target: DomainDescriptor
    # Isolated zeros of the derivative, for metric pullbacks. Preimages of a
    # target metric's own degeneracies are not tracked here.
    deriv_zeros: Tuple[complex, ...] = ()
    name: str = "f"

    def __call__(self, z):
        return self.eval(z)

    def __repr__(self):
        return f"HolomorphicMap({self.name})"


def holomorphic_map(eval, deriv, source, target, deriv_zeros=(), name="f"):
    return HolomorphicMap(eval, deriv, source, target, tuple(deriv_zeros), name)


def identity_map(domain: DomainDescriptor) -> HolomorphicMap:
    return HolomorphicMap(
        eval=lambda z: z + 0j,
        deriv=lambda z: np.ones_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 1 + 0j,
        source=domain,
        target=domain,
        name="id",
    )


def constant_map(c: complex, source: DomainDescriptor, target: DomainDescriptor) -> HolomorphicMap:
    c = complex(c)
    return HolomorphicMap(
        eval=lambda z: np.full_like(np.asarray(z, dtype=complex), c) if np.ndim(z) else c,
        deriv=lambda z: np.zeros_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 0j,
        source=source,
        target=target,
        name=f"const({c:g})",
    )


def affine_map(a: complex, b: complex, source: DomainDescriptor, target: DomainDescriptor,
               name=None) -> HolomorphicMap:
    """z -> a + b z."""
    a, b = complex(a), complex(b)
    return HolomorphicMap(
        eval=lambda z: a + b * z,
        deriv=lambda z: b * np.ones_like(np.asarray(z, dtype=complex)) if np.ndim(z) else b,
        source=source,
        target=target,
        name=name or f"{a:g}+{b:g}*z",
    )


def polynomial_map(coeffs, source: DomainDescriptor, target: DomainDescriptor,
                   name=None) -> HolomorphicMap:
    """Polynomial with coefficients low order first."""
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or c.size == 0:
        raise ContractError("polynomial needs a nonempty 1-d coefficient list")
    dc = c[1:] * np.arange(1, c.size)
    zeros: Tuple[complex, ...] = ()
    if dc.size > 1 and np.any(dc[1:] != 0):
        roots = np.roots(dc[::-1])
        zeros = tuple(complex(r) for r in roots)

    def ev(z):
        return np.polyval(c[::-1], z)

    def dv(z):
        if dc.size == 0:
            return np.zeros_like(np.asarray(z, dtype=complex)) if np.ndim(z) else 0j
        return np.polyval(dc[::-1], z)

    return HolomorphicMap(ev, dv, source, target, zeros, name or "poly")


def automorphism_map(t: DiscAutomorphism) -> HolomorphicMap:
    disc = unit_disc()
    phase = np.exp(1j * t.rotation_angle)
    b = complex(t.mobius_center)
    return HolomorphicMap(
        eval=lambda z: phase * mobius(b, z),
        deriv=lambda z: phase * mobius_derivative(b, z),
        source=disc,
        target=disc,
        name=f"aut(theta={t.rotation_angle:g}, b={b:g})",
    )


def blaschke_product(zeros, phase: complex = 1.0) -> HolomorphicMap:
    """B(z) = phase * prod_k (z - a_k)/(1 - conj(a_k) z), |a_k| < 1."""
    zs = [complex(a) for a in zeros]
    if any(abs(a) >= 1 for a in zs):
        raise ContractError("Blaschke zeros must lie in the open disc")
    phase = complex(phase)
    if abs(abs(phase) - 1.0) > 1e-12:
        raise ContractError("Blaschke phase must be unimodular")
    disc = unit_disc()

    def factors(z):
        return [mobius(a, z) for a in zs]

    def ev(z):
        out = phase * np.ones_like(np.asarray(z, dtype=complex)) if np.ndim(z) else phase
        for u in factors(z):
            out = out * u
        return out

    def dv(z):
        us = factors(z)
        dus = [mobius_derivative(a, z) for a in zs]
        total = 0j
        for j in range(len(zs)):
            term = dus[j]
            for k in range(len(zs)):
                if k != j:
                    term = term * us[k]
            total = total + term
        return phase * total

    return HolomorphicMap(ev, dv, disc, disc, tuple(), f"blaschke(deg={len(zs)})")


def compose_maps(g: HolomorphicMap, f: HolomorphicMap) -> HolomorphicMap:
    """The map z -> g(f(z)). Derivative zeros carried over from f only."""
    return HolomorphicMap(
        eval=lambda z: g.eval(f.eval(z)),
        deriv=lambda z: g.deriv(f.eval(z)) * f.deriv(z),
        source=f.source,
        target=g.target,
        deriv_zeros=f.deriv_zeros,
        name=f"{g.name}∘{f.name}",
    )


def validate_derivative(f: HolomorphicMap, samples: int = 32, seed: int = 0,
                        step: float = 1e-5, rtol: float = 1e-6) -> float:
    """Largest relative mismatch between f.deriv and a central difference of
    f.eval at random interior points. Raises ContractError above rtol."""
    rng = np.random.default_rng(seed)
    box = f.source.bounding_box
    pts = []
    while len(pts) < samples:
        if box is None:
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        else:
            z = complex(rng.uniform(box[0], box[1]), rng.uniform(box[2], box[3]))
        if f.source.contains(z) and f.source.boundary_distance(z) > 4 * step:
            pts.append(z)
    worst = 0.0
    for z in pts:
        fd = (f.eval(z + step) - f.eval(z - step)) / (2 * step)
        d = f.deriv(z)
        worst = max(worst, abs(fd - d) / max(1.0, abs(d)))
    if worst > rtol:
        raise ContractError(
            f"derivative of {f.name} disagrees with finite differences "
            f"(relative error {worst:.3e} > {rtol:g})"
        )
    return worst
