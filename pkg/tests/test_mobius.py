import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hypmet.errors import DomainError
from hypmet.mobius import (DiscAutomorphism, apply_automorphism, artanh,
                           compose_automorphisms, invert_automorphism,
                           is_point_at_infinity, mobius, mobius_derivative)


def polar(r, t):
    return r * complex(math.cos(t), math.sin(t))


disc_pts = st.builds(polar, st.floats(0.0, 0.9), st.floats(0.0, 2.0 * math.pi))


def test_mobius_sends_center_to_zero():
    a = 0.3 + 0.4j
    assert mobius(a, a) == 0
    assert mobius(0j, 0.5 + 0j) == 0.5  # a = 0 is the identity


def test_mobius_rejects_boundary_center():
    with pytest.raises(DomainError):
        mobius(1.0 + 0j, 0j)


@given(a=disc_pts, z=disc_pts)
def test_mobius_keeps_disc(a, z):
    w = mobius(a, z)
    assert abs(w) < 1.0 + 1e-12


@given(a=disc_pts, z=disc_pts)
def test_involution_swaps_zero_and_center(a, z):
    # -mobius(a, .) exchanges 0 and a and is its own inverse
    inv = lambda w: -mobius(a, w)
    assert abs(inv(0j) - a) < 1e-14
    assert abs(inv(a)) < 1e-14
    assert abs(inv(inv(z)) - z) < 1e-12


def test_mobius_derivative_matches_finite_difference():
    a = 0.2 - 0.5j
    z = 0.1 + 0.3j
    h = 1e-7
    fd = (mobius(a, z + h) - mobius(a, z - h)) / (2.0 * h)
    assert abs(mobius_derivative(a, z) - fd) < 1e-7


def test_artanh_values():
    assert artanh(0.0) == 0.0
    assert abs(artanh(0.5) - 0.5 * math.log(3.0)) < 1e-15
    assert abs(2.0 * artanh(math.tanh(0.25)) - 0.5) < 1e-14


@given(z=disc_pts)
def test_automorphism_roundtrip(z):
    t = DiscAutomorphism(rotation_angle=0.7, mobius_center=0.3 - 0.2j)
    assert abs(t.inverse().apply(t.apply(z)) - z) < 1e-12


@given(z=disc_pts)
def test_automorphism_composition(z):
    t1 = DiscAutomorphism(rotation_angle=0.4, mobius_center=0.25j)
    t2 = DiscAutomorphism(rotation_angle=-1.1, mobius_center=-0.4 + 0.1j)
    comp = compose_automorphisms(t2, t1)
    assert abs(comp.apply(z) - t2.apply(t1.apply(z))) < 1e-12


def test_invert_automorphism():
    t = DiscAutomorphism(rotation_angle=1.2, mobius_center=0.5 + 0.1j)
    ti = invert_automorphism(t)
    for z in (0j, 0.3 + 0.3j, -0.6j):
        assert abs(ti.apply(t.apply(z)) - z) < 1e-12
        assert abs(apply_automorphism(t, ti.apply(z)) - z) < 1e-12


def test_point_at_infinity_detection():
    assert is_point_at_infinity(complex(math.inf, 0.0))
    assert is_point_at_infinity(complex(0.0, math.nan))
    assert not is_point_at_infinity(1e300 + 0j)


def test_mobius_vectorized():
    a = 0.1 + 0.2j
    z = np.array([0j, 0.5 + 0j, -0.3j])
    w = mobius(a, z)
    assert w.shape == (3,)
    assert abs(w[0] - mobius(a, 0j)) < 1e-15
