"""Disc Mobius maps and automorphisms of the unit disc.

An automorphism is stored as the pair (rotation_angle, mobius_center) and
acts as z -> e^{i*theta} * (z - b) / (1 - conj(b) z).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Sentinel for the point at infinity; only the chart in the punctured-plane
# metric ever produces or consumes it.
POINT_AT_INFINITY = complex(math.inf, math.inf)


def is_point_at_infinity(z) -> bool:
    z = complex(z)
    return not (math.isfinite(z.real) and math.isfinite(z.imag))


def artanh(x: float) -> float:
    """Inverse hyperbolic tangent, (1/2) log((1+x)/(1-x)) on (-1, 1)."""
    if not -1.0 < x < 1.0:
        raise DomainError(f"artanh requires -1 < x < 1, got {x!r}")
    return math.atanh(x)


def mobius(a: complex, z):
    """phi_a(z) = (z - a) / (1 - conj(a) z), for |a| < 1.

    Accepts a scalar or a numpy array for z.
    """
    a = complex(a)
    if abs(a) >= 1.0:
        raise DomainError(f"mobius center must satisfy |a| < 1, got |a|={abs(a)}")
    den = 1.0 - np.conjugate(a) * z
    if np.any(np.abs(den) < 1e-300):
        raise DomainError("mobius denominator vanished (|a||z| = 1 case)")
    return (z - a) / den


def mobius_derivative(a: complex, z):
    """phi_a'(z) = (1 - |a|^2) / (1 - conj(a) z)^2."""
    a = complex(a)
    if abs(a) >= 1.0:
        raise DomainError(f"mobius center must satisfy |a| < 1, got |a|={abs(a)}")
    den = 1.0 - np.conjugate(a) * z
    if np.any(np.abs(den) < 1e-300):
        raise DomainError("mobius denominator vanished (|a||z| = 1 case)")
    return (1.0 - abs(a) ** 2) / den**2


@dataclass(frozen=True)
class DiscAutomorphism:
    """z -> e^{i*rotation_angle} * phi_{mobius_center}(z)."""

    rotation_angle: float = 0.0
    mobius_center: complex = 0j

    def __post_init__(self):
        if abs(complex(self.mobius_center)) >= 1.0:
            raise DomainError(
                f"automorphism center must lie in the open disc, got "
                f"{self.mobius_center!r}"
            )

    def apply(self, z):
        return apply_automorphism(self, z)

    def inverse(self) -> "DiscAutomorphism":
        return invert_automorphism(self)

    def compose(self, other: "DiscAutomorphism") -> "DiscAutomorphism":
        """self after other: returns t with t(z) = self(other(z))."""
        return compose_automorphisms(self, other)


def apply_automorphism(t: DiscAutomorphism, z):
    return cmath.exp(1j * t.rotation_angle) * mobius(t.mobius_center, z)


def invert_automorphism(t: DiscAutomorphism) -> DiscAutomorphism:
    # With T(z) = e^{i a} (z-b)/(1 - conj(b) z), solving w = T(z) for z gives
    # the standard form again with angle -a and center -b e^{i a}.
    phase = cmath.exp(1j * t.rotation_angle)
    return DiscAutomorphism(
        rotation_angle=-t.rotation_angle,
        mobius_center=-complex(t.mobius_center) * phase,
    )


def compose_automorphisms(t2: DiscAutomorphism, t1: DiscAutomorphism) -> DiscAutomorphism:
    """The automorphism z -> t2(t1(z))."""
    # Center: the zero of the composite, b = t1^{-1}(b2).
    b = apply_automorphism(invert_automorphism(t1), complex(t2.mobius_center))
    # Phase: T'(b) = e^{i theta} / (1 - |b|^2) for the standard form.
    db = (
        cmath.exp(1j * t2.rotation_angle)
        * mobius_derivative(t2.mobius_center, apply_automorphism(t1, b))
        * cmath.exp(1j * t1.rotation_angle)
        * mobius_derivative(t1.mobius_center, b)
    )
    phase = db * (1.0 - abs(b) ** 2)
    return DiscAutomorphism(
        rotation_angle=math.atan2(phase.imag, phase.real),
        mobius_center=b,
    )
