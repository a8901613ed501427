"""Planar domain descriptors.

A DomainDescriptor knows membership, distance to the (finite) boundary,
its punctures, and whether infinity is part of its boundary. Callables are
numpy-friendly: they accept scalars or arrays and broadcast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

# Metric evaluations stay this far inside the open unit disc; algebraic maps
# may touch the boundary but densities blow up there.
DISC_EDGE = 1.0 - 1e-12


@dataclass(frozen=True)
class DomainDescriptor:
    contains: Callable
    boundary_distance: Callable
    punctures: tuple = ()
    includes_infinity_boundary: bool = False
    name: str = "domain"
    # Conservative axis-aligned box (x0, x1, y0, y1) covering the domain,
    # None when unbounded. Meshing needs one.
    bounding_box: Optional[tuple] = None

    def __repr__(self):  # keep reports readable
        return f"DomainDescriptor({self.name})"


def disc_of_radius(r: float) -> DomainDescriptor:
    if not (r > 0 and math.isfinite(r)):
        raise ValueError(f"disc radius must be positive and finite, got {r!r}")

    def contains(z):
        return np.abs(z) < r

    def boundary_distance(z):
        return r - np.abs(z)

    return DomainDescriptor(
        contains=contains,
        boundary_distance=boundary_distance,
        punctures=(),
        includes_infinity_boundary=False,
        name=f"disc_r={r:g}" if r != 1.0 else "disc",
        bounding_box=(-r, r, -r, r),
    )


def unit_disc() -> DomainDescriptor:
    return disc_of_radius(1.0)


def complex_plane() -> DomainDescriptor:
    def contains(z):
        return np.isfinite(z)

    def boundary_distance(z):
        # no finite boundary
        return np.abs(z) * 0.0 + np.inf

    return DomainDescriptor(
        contains=contains,
        boundary_distance=boundary_distance,
        punctures=(),
        includes_infinity_boundary=True,
        name="plane",
        bounding_box=None,
    )


def punctured_plane() -> DomainDescriptor:
    def contains(z):
        return np.isfinite(z) & (np.abs(z) > 0)

    def boundary_distance(z):
        return np.abs(z)

    return DomainDescriptor(
        contains=contains,
        boundary_distance=boundary_distance,
        punctures=(0j,),
        includes_infinity_boundary=True,
        name="punctured-plane",
        bounding_box=None,
    )


def twice_punctured_plane() -> DomainDescriptor:
    """The plane minus {0, 1}; boundary_distance is the puncture distance."""

    def contains(z):
        az = np.abs(z)
        az1 = np.abs(z - 1.0)
        return np.isfinite(z) & (az > 0) & (az1 > 0)

    def boundary_distance(z):
        return np.minimum(np.abs(z), np.abs(z - 1.0))

    return DomainDescriptor(
        contains=contains,
        boundary_distance=boundary_distance,
        punctures=(0j, 1 + 0j),
        includes_infinity_boundary=True,
        name="twice-punctured-plane",
        bounding_box=None,
    )
