"""Deterministic low-discrepancy sampling for the verification suites.

Halton sequences with a seeded Cranley-Patterson rotation: the same seed
always produces the same points, and growing the sample count keeps the
earlier points (prefix property), which makes worst-violation statistics
monotone in the sample count.
"""

from __future__ import annotations

import numpy as np

_PRIMES = (2, 3, 5, 7, 11, 13)


def _halton_axis(n: int, base: int) -> np.ndarray:
    # radical inverse of 1..n in the given base
    out = np.zeros(n)
    idx = np.arange(1, n + 1)
    f = 1.0
    while np.any(idx > 0):
        f /= base
        out += f * (idx % base)
        idx //= base
    return out


def halton(n: int, dim: int, seed: int = 0) -> np.ndarray:
    """n points in [0,1)^dim, rotated by a seeded offset (mod 1)."""
    if dim > len(_PRIMES):
        raise ValueError(f"halton supports dim <= {len(_PRIMES)}")
    pts = np.stack([_halton_axis(n, _PRIMES[d]) for d in range(dim)], axis=1)
    shift = np.random.default_rng(seed).random(dim)
    return np.mod(pts + shift, 1.0)


def disc_samples(n: int, seed: int = 0, radius: float = 0.98,
                 center: complex = 0j) -> np.ndarray:
    """Low-discrepancy points in the disc of the given radius (area-uniform)."""
    u = halton(n, 2, seed)
    r = radius * np.sqrt(u[:, 0])
    return center + r * np.exp(2j * np.pi * u[:, 1])


def disc_pairs(n: int, seed: int = 0, radius: float = 0.98):
    """n pairs of disc points, drawn from a 4-dimensional Halton stream."""
    u = halton(n, 4, seed)
    p = radius * np.sqrt(u[:, 0]) * np.exp(2j * np.pi * u[:, 1])
    q = radius * np.sqrt(u[:, 2]) * np.exp(2j * np.pi * u[:, 3])
    return p, q
