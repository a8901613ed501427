"""Deterministic SVG figures: nested Poincare balls with geodesic spokes.

Rendering is a pure function of the FigureSpec, with every coordinate
printed through one fixed format, so rerunning a figure reproduces it byte
for byte. The disc1 spec draws hyperbolic circles around the origin (where
they are concentric Euclidean circles); disc2 transports the same
configuration to (1+i)/2 by a disc automorphism, which visibly off-centers
the Euclidean images while the hyperbolic radii stay put.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from .distances import poincare_ball
from .errors import DomainError
from .mobius import mobius

BALL_RADII = (0.5, 1.0, 1.5, 2.0, 2.5, 3.0)
SPOKE_COUNT = 8
POLYLINE_POINTS = 129
_FILLS = ("#dbe7f6", "#f6ecdb")


@dataclass(frozen=True)
class FigureSpec:
    """Hyperbolic ball-and-spoke figure: balls of the given hyperbolic radii
    around the center, plus evenly rotated geodesics through it."""
    name: str
    center: complex
    ball_radii: Tuple[float, ...] = BALL_RADII
    spokes: int = SPOKE_COUNT

    def __post_init__(self):
        if abs(self.center) >= 1.0:
            raise DomainError("figure center must lie in the unit disc")
        if not self.ball_radii or any(r <= 0 for r in self.ball_radii):
            raise DomainError("ball radii must be positive")


def disc1_spec() -> FigureSpec:
    return FigureSpec(name="disc1", center=0j)


def disc2_spec() -> FigureSpec:
    return FigureSpec(name="disc2", center=(1.0 + 1.0j) / 2.0)


def figure_catalog() -> Dict[str, FigureSpec]:
    return {"disc1": disc1_spec(), "disc2": disc2_spec()}


def _fmt(x: float) -> str:
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.6f}"


def render_figure(spec: FigureSpec) -> str:
    """SVG text for the figure; math orientation (y up), dashed unit circle,
    balls painted largest first with alternating fills, spokes on top."""
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" '
        'width="480" height="480">',
        '<g transform="scale(1,-1)">',
        '<circle cx="0" cy="0" r="1" fill="none" stroke="#777777" '
        'stroke-width="0.008" stroke-dasharray="0.045 0.03"/>',
    ]
    balls = [poincare_ball(spec.center, r) for r in spec.ball_radii]
    order = sorted(range(len(balls)), key=lambda i: -balls[i][1])
    for slot, i in enumerate(order):
        c, er = balls[i]
        lines.append(
            f'<circle cx="{_fmt(c.real)}" cy="{_fmt(c.imag)}" r="{_fmt(er)}" '
            f'fill="{_FILLS[slot % 2]}" stroke="#35508c" stroke-width="0.006"/>')
    reach = float(np.tanh(max(spec.ball_radii) / 2.0))
    t = np.linspace(-1.0, 1.0, POLYLINE_POINTS)
    for k in range(spec.spokes):
        ang = np.pi * k / spec.spokes
        seg = reach * t * np.exp(1j * ang)
        pts = -mobius(spec.center, seg) if spec.center != 0 else seg
        coords = " ".join(f"{_fmt(z.real)},{_fmt(z.imag)}" for z in pts)
        lines.append(
            f'<polyline fill="none" stroke="#60666d" stroke-width="0.005" '
            f'points="{coords}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
