import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from hypmet.distances import (geodesic, mobius_distance, poincare_ball,
                              poincare_distance, poincare_distance_forms)
from hypmet.errors import DomainError
from hypmet.metrics import poincare_metric
from hypmet.paths import line_segment, path_length


def polar(r, t):
    return r * complex(math.cos(t), math.sin(t))


disc_pts = st.builds(polar, st.floats(0.0, 0.95), st.floats(0.0, 2.0 * math.pi))

# frozen Euclidean radii of hyperbolic balls around 0, r_hyp = 0.5..3.0
BALL_ORACLE = (0.244919, 0.462117, 0.635149, 0.761594, 0.848284, 0.905148)


def test_distance_oracles():
    assert abs(poincare_distance(0j, 0.5 + 0j) - math.log(3.0)) < 1e-15
    assert abs(poincare_distance(0.5 + 0j, -0.5 + 0j) - math.log(9.0)) < 1e-14


@given(p=disc_pts, q=disc_pts)
def test_three_forms_agree(p, q):
    f1, f2, f3 = poincare_distance_forms(p, q)
    assert abs(f1 - f3) < 1e-12
    assert abs(f2 - f3) < 1e-12


@given(p=disc_pts, q=disc_pts)
def test_symmetry(p, q):
    assert abs(poincare_distance(p, q) - poincare_distance(q, p)) < 1e-12


@given(p=disc_pts, q=disc_pts, r=disc_pts)
def test_triangle_inequality(p, q, r):
    d = poincare_distance
    assert d(p, q) <= d(p, r) + d(r, q) + 1e-10


@given(p=disc_pts, q=disc_pts)
def test_mobius_distance_is_tanh_of_half(p, q):
    mu = mobius_distance(p, q)
    assert abs(mu - math.tanh(poincare_distance(p, q) / 2.0)) < 1e-12


def test_distance_rejects_boundary():
    with pytest.raises(DomainError):
        poincare_distance(1.0 + 0j, 0j)


def test_geodesic_endpoints_and_midpoint():
    p, q = 0.3 + 0.2j, -0.4 - 0.1j
    gamma = geodesic(p, q)
    assert abs(gamma.point(0.0) - p) < 1e-14
    assert abs(gamma.point(1.0) - q) < 1e-14
    mid = gamma.point(0.5)
    total = poincare_distance(p, q)
    assert abs(poincare_distance(p, mid) + poincare_distance(mid, q) - total) < 1e-12


@settings(max_examples=25, deadline=None)
@given(p=disc_pts, q=disc_pts)
def test_geodesic_length_matches_distance(p, q):
    assume(abs(p - q) > 1e-6)
    gamma = geodesic(p, q)
    L = path_length(poincare_metric(), gamma)
    assert abs(L - poincare_distance(p, q)) < 1e-8


def test_ball_radii_oracle():
    for k, oracle in enumerate(BALL_ORACLE):
        r_hyp = 0.5 * (k + 1)
        center, radius = poincare_ball(0j, r_hyp)
        assert abs(center) < 1e-12
        assert abs(radius - math.tanh(r_hyp / 2.0)) < 1e-12
        assert abs(radius - oracle) < 1e-6


def test_offcenter_ball_is_euclidean_circle_of_equidistant_points():
    c = 0.5 + 0.3j
    ec, er = poincare_ball(c, 1.0)
    for t in np.linspace(0.0, 2.0 * math.pi, 17):
        z = ec + er * complex(math.cos(t), math.sin(t))
        assert abs(poincare_distance(c, z) - 1.0) < 1e-10
    # Euclidean center is pulled toward the origin relative to c
    assert abs(ec) < abs(c) + 1e-15


def test_straight_diameter_is_geodesic():
    L = path_length(poincare_metric(), line_segment(0j, 0.5 + 0j))
    assert abs(L - math.log(3.0)) < 1e-9
