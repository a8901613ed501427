"""Path constructors and metric length integration."""

import math

import pytest

from hypmet.errors import ContractError, DegeneratePathError, DomainError
from hypmet.maps import automorphism_map
from hypmet.metrics import poincare_metric
from hypmet.mobius import DiscAutomorphism
from hypmet.paths import (
    PathSpec,
    circular_arc,
    concat_paths,
    line_segment,
    map_path,
    path_length,
    reverse_path,
)
from hypmet.quadrature import composite_simpson


def test_quarter_circle_length_oracle():
    # |z| = 1/2 quarter turn: sqrt(2 * 2/(1-r^2)^2) * (pi/2 * r) = 2 pi / 3
    gamma = circular_arc(0j, 0.5, 0.0, math.pi / 2)
    m = poincare_metric()
    got = path_length(m, gamma)
    assert abs(got - 2.0 * math.pi / 3.0) < 1e-9

    # independent quadrature of the same integrand
    def integrand(t):
        z = gamma.point(t)
        return math.sqrt(2.0 * float(m.density(z))) * abs(gamma.velocity(t))

    ref = composite_simpson(integrand, 0.0, 1.0, 200)
    assert abs(got - ref) < 1e-9


def test_radial_segment_lengths():
    m = poincare_metric()
    assert abs(path_length(m, line_segment(0j, 0.5 + 0j)) - math.log(3.0)) < 1e-9
    assert abs(path_length(m, line_segment(-0.5 + 0j, 0.5 + 0j)) - math.log(9.0)) < 1e-9


def test_degenerate_constructors():
    with pytest.raises(DegeneratePathError):
        line_segment(0.3j, 0.3j)
    with pytest.raises(DegeneratePathError):
        circular_arc(0j, 0.0, 0.0, 1.0)
    with pytest.raises(DegeneratePathError):
        circular_arc(0j, 0.5, 1.2, 1.2)


def test_concat_lengths_add():
    m = poincare_metric()
    left = line_segment(-0.5 + 0j, 0j)
    right = line_segment(0j, 0.5 + 0j)
    both = concat_paths(left, right)
    assert 0.5 in both.breakpoints
    assert abs(path_length(m, both) - math.log(9.0)) < 1e-9


def test_concat_requires_continuity():
    with pytest.raises(ContractError):
        concat_paths(line_segment(0j, 0.2 + 0j), line_segment(0.3 + 0j, 0.5 + 0j))


def test_reverse_preserves_length():
    m = poincare_metric()
    gamma = circular_arc(0.1 + 0.1j, 0.3, 0.2, 2.0)
    assert abs(path_length(m, gamma) - path_length(m, reverse_path(gamma))) < 1e-9
    rev = reverse_path(gamma)
    assert abs(rev.point(0.0) - gamma.point(1.0)) < 1e-15


def test_map_path_isometry():
    # automorphisms are isometries of the Poincare metric
    m = poincare_metric()
    gamma = line_segment(-0.2 + 0.1j, 0.4 - 0.3j)
    t = DiscAutomorphism(rotation_angle=1.1, mobius_center=0.25 + 0.2j)
    image = map_path(automorphism_map(t), gamma)
    assert abs(path_length(m, gamma) - path_length(m, image)) < 1e-9


def test_full_output_info():
    m = poincare_metric()
    total, info = path_length(m, line_segment(0j, 0.5 + 0j), full_output=True)
    assert abs(total - math.log(3.0)) < 1e-9
    assert info.converged
    assert info.evaluations > 0
    assert info.error_estimate < 1e-6


def test_path_leaving_domain():
    m = poincare_metric()
    with pytest.raises(DomainError):
        path_length(m, line_segment(0j, 1.5 + 0j))


def test_breakpoint_validation():
    with pytest.raises(ContractError):
        PathSpec(point=lambda t: t, velocity=lambda t: 1.0, breakpoints=(0.7, 0.3))
    with pytest.raises(ContractError):
        PathSpec(point=lambda t: t, velocity=lambda t: 1.0, breakpoints=(0.0,))
