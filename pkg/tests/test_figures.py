"""SVG figure determinism and geometry."""

import math
import xml.etree.ElementTree as ET

import pytest

from hypmet.errors import DomainError
from hypmet.figures import (
    BALL_RADII,
    FigureSpec,
    disc1_spec,
    disc2_spec,
    figure_catalog,
    render_figure,
)

SVG_NS = "{http://www.w3.org/2000/svg}"


def _circles(svg):
    root = ET.fromstring(svg)
    return root.findall(f".//{SVG_NS}circle")


def _polylines(svg):
    root = ET.fromstring(svg)
    return root.findall(f".//{SVG_NS}polyline")


def test_render_is_byte_deterministic():
    for spec in figure_catalog().values():
        assert render_figure(spec) == render_figure(spec)


def test_disc1_ball_radii_frozen():
    svg = render_figure(disc1_spec())
    got = sorted(float(c.get("r")) for c in _circles(svg) if c.get("fill") != "none")
    want = sorted(math.tanh(r / 2.0) for r in BALL_RADII)
    assert len(got) == 6
    for g, w in zip(got, want):
        assert abs(g - w) < 1e-6
    # all concentric at the origin
    for c in _circles(svg):
        if c.get("fill") != "none":
            assert float(c.get("cx")) == 0.0 and float(c.get("cy")) == 0.0


def test_disc2_balls_not_concentric():
    svg = render_figure(disc2_spec())
    centers = {(c.get("cx"), c.get("cy")) for c in _circles(svg)
               if c.get("fill") != "none"}
    assert len(centers) == 6  # euclidean centers drift toward the boundary
    for c in _circles(svg):
        r = float(c.get("r"))
        cx, cy = float(c.get("cx")), float(c.get("cy"))
        assert math.hypot(cx, cy) + r <= 1.0 + 1e-9  # stays inside the disc


def test_spokes_shape():
    svg = render_figure(disc1_spec())
    polys = _polylines(svg)
    assert len(polys) == 8
    for p in polys:
        assert len(p.get("points").split()) == 129


def test_viewbox_and_frame():
    svg = render_figure(disc1_spec())
    root = ET.fromstring(svg)
    assert root.get("viewBox") == "-1.1 -1.1 2.2 2.2"
    frames = [c for c in _circles(svg) if c.get("fill") == "none"]
    assert len(frames) == 1 and frames[0].get("r") == "1"


def test_spec_validation():
    with pytest.raises(DomainError):
        FigureSpec(name="bad", center=1.0 + 0j)
    with pytest.raises(DomainError):
        FigureSpec(name="bad", center=0j, ball_radii=(0.5, -1.0))
    with pytest.raises(DomainError):
        FigureSpec(name="bad", center=0j, ball_radii=())


def test_catalog_names():
    cat = figure_catalog()
    assert set(cat) == {"disc1", "disc2"}
    assert cat["disc2"].center == (1.0 + 1.0j) / 2.0
