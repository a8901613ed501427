"""The complete metric on the twice punctured plane and its applications."""

import math

import numpy as np
import pytest

from hypmet.domains import unit_disc, twice_punctured_plane
from hypmet.errors import CalibrationError, ContractError, DomainError
from hypmet.maps import affine_map, identity_map
from hypmet.metrics import gauss_curvature, poincare_metric
from hypmet.picard import (
    PpcMetricParams,
    ahlfors_check,
    ahlfors_witnesses,
    bloch_metric_density,
    bloch_radius_estimate,
    calibrate_C,
    completeness_probe,
    curvature_limits,
    euclidean_control_probe,
    landau_bloch_catalog,
    landau_point_metric,
    landau_radius_bound,
    landau_radius_estimate,
    landau_supporting_check,
    landau_target_metric,
    little_picard_derivative_bound,
    ppc_curvature,
    ppc_curvature_grid,
    ppc_density,
    ppc_density_grid,
    ppc_metric,
    schottky_base_points,
    schottky_bound,
    schottky_witnesses,
)
from hypmet.verifiers import disc_map_catalog

P16 = PpcMetricParams(16.0)


# ---------------------------------------------------------------- density


def test_density_frozen_value():
    assert abs(ppc_density(-1.0 + 0j, P16) - 0.013914648109990322) < 1e-15


def test_params_reject_small_C():
    with pytest.raises(DomainError):
        PpcMetricParams(9.0)


def test_strict_accessors_reject_punctures():
    for bad in (0j, 1.0 + 0j, complex(math.inf, 0.0)):
        with pytest.raises(DomainError):
            ppc_density(bad, P16)
        with pytest.raises(DomainError):
            ppc_curvature(bad, P16)


def test_permissive_grid_sentinels():
    lam = ppc_density_grid(np.array([0j, 1.0 + 0j, -1.0 + 0j]), P16)
    assert lam[0] == math.inf and lam[1] == math.inf
    assert abs(lam[2] - 0.013914648109990322) < 1e-15
    # scalar in, scalar out
    assert isinstance(ppc_density_grid(-1.0 + 0j, P16), float)


def test_chart_identity_far_field():
    # lam(z) = lam(1/z) / |z|^4 links the two charts
    for z in (3.7e9 + 1.1e9j, -2.0e10 + 5.0e9j):
        direct = ppc_density_grid(z, P16)
        via_chart = ppc_density_grid(1.0 / z, P16) / abs(z) ** 4
        assert abs(direct - via_chart) < 1e-12 * via_chart


def test_density_diverges_into_puncture():
    vals = [ppc_density(10.0 ** -k + 0j, P16) for k in range(2, 9)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] > 1e6


# -------------------------------------------------------------- curvature


def test_closed_form_curvature_vs_fd():
    m = ppc_metric(P16)
    for z in (2.35 + 0j, -1.0 + 0.5j, 0.5 + 2.0j, 3.0 - 1.0j):
        fd = gauss_curvature(m, z, step=1e-4)
        closed = ppc_curvature(z, P16)
        assert abs(fd - closed) < 1e-4
        assert closed < -1.0


def test_curvature_limits_frozen():
    lim = curvature_limits(P16)
    assert abs(lim["zero"] - (-16.620127097982003)) < 1e-9
    assert abs(lim["one"] - (-4.674410746307438)) < 1e-9
    assert lim["infinity"] == lim["zero"]


def test_curvature_chart_symmetry():
    for z in (2.0e9 + 1.0e9j, 5.0e10j):
        assert abs(ppc_curvature_grid(z, P16) - ppc_curvature_grid(1.0 / z, P16)) < 1e-9


# ------------------------------------------------------------- calibration


def test_calibration_certificate(calibrated):
    cert = calibrated.certificate
    assert calibrated.C == 16.0
    assert cert["C"] == 16.0
    assert abs(cert["max_curvature"] - (-1.2606277403335961)) < 1e-9
    assert cert["max_curvature"] < -1.0 - cert["margin"]
    assert cert["sample_count"] > 30000
    tried = cert["candidates_tried"]
    assert [rec["C"] for rec in tried] == [9.5, 10.0, 12.0, 16.0]
    assert [rec["pass"] for rec in tried] == [False, False, False, True]


def test_calibration_failure_raises():
    with pytest.raises(CalibrationError):
        calibrate_C(candidates=(9.5, 10.0))
    with pytest.raises(CalibrationError):
        calibrate_C(search_range=(100.0, 200.0))
    with pytest.raises(DomainError):
        calibrate_C(candidates=(5.0, 16.0))


# ------------------------------------------------------------ completeness


@pytest.mark.parametrize("target", ["0", "1", "infinity"])
def test_completeness_probe_diverges(target):
    rep = completeness_probe(P16, target)
    assert rep.divergence_flag
    assert rep.fitted_growth["slope"] > 0.2
    assert rep.fitted_growth["residual_rel_rms"] < 0.05
    lengths = [v for _, v in rep.t_samples]
    assert lengths == sorted(lengths)


def test_probe_target_spellings():
    assert completeness_probe(P16, 0).target == "0"
    assert completeness_probe(P16, "one").target == "1"
    assert completeness_probe(P16, math.inf).target == "infinity"
    with pytest.raises(DomainError):
        completeness_probe(P16, "two")


def test_euclidean_control_stays_bounded():
    rep = euclidean_control_probe()
    assert not rep.divergence_flag
    assert rep.t_samples[-1][1] < 1.0


# ---------------------------------------------------------------- ahlfors


def test_ahlfors_identity_is_equality():
    rep = ahlfors_check(poincare_metric(), -1.0, identity_map(unit_disc()))
    assert rep.passed
    assert abs(rep.worst_violation) < 1e-9


def test_ahlfors_disc_catalog():
    m = poincare_metric()
    for f in disc_map_catalog():
        rep = ahlfors_check(m, -1.0, f)
        assert rep.passed, f"{f.name}: {rep.worst_violation}"


def test_ahlfors_hypothesis_stage():
    # claiming K <= -2 for the Poincare metric fails the precheck
    rep = ahlfors_check(poincare_metric(), -2.0, identity_map(unit_disc()))
    assert not rep.passed
    assert rep.check_name == "ahlfors-hypothesis"
    assert rep.params["stage"] == "hypothesis"


def test_ahlfors_requires_negative_bound():
    with pytest.raises(DomainError):
        ahlfors_check(poincare_metric(), 0.0, identity_map(unit_disc()))


def test_ahlfors_ppc_witnesses(calibrated):
    m = ppc_metric(calibrated)
    bound = calibrated.certificate["max_curvature"]
    for f in ahlfors_witnesses(calibrated)[:4]:
        rep = ahlfors_check(m, bound, f)
        assert rep.passed, f"{f.name}: {rep.worst_violation}"


# ---------------------------------------------------- picard-type bounds


def test_little_picard_bound_accepts_slow_map():
    f = affine_map(3.0, 0.1, unit_disc(), twice_punctured_plane())
    bound = little_picard_derivative_bound(f, 0j, 1.0, P16)
    assert abs(bound - 2.0 / ppc_density(3.0 + 0j, P16)) < 1e-12


def test_little_picard_bound_rejects_fast_map():
    f = affine_map(3.0, 5.0, unit_disc(), twice_punctured_plane())
    with pytest.raises(ContractError):
        little_picard_derivative_bound(f, 0j, 1.0, P16)


def test_little_picard_bound_needs_clearance():
    f = affine_map(1.0, 1e-12, unit_disc(), twice_punctured_plane())
    with pytest.raises(DomainError):
        little_picard_derivative_bound(f, 0j, 1.0, P16)
    g = affine_map(3.0, 0.1, unit_disc(), twice_punctured_plane())
    with pytest.raises(DomainError):
        little_picard_derivative_bound(g, 0j, -1.0, P16)


def test_landau_radius_bound_frozen():
    assert abs(landau_radius_bound(-1.0, 1.0, P16) - 143.73342280672242) < 1e-9


def test_landau_radius_bound_rejects():
    with pytest.raises(DomainError):
        landau_radius_bound(-1.0, 0.0, P16)
    with pytest.raises(DomainError):
        landau_radius_bound(1.0, 1.0, P16)


# ---------------------------------------------------------------- schottky


def test_schottky_degenerate_radius():
    assert schottky_bound(1.0, 0.0, 4.0, P16) == 4.0


def test_schottky_monotone_in_r():
    lo = schottky_bound(1.0, 0.25, 4.0, P16, resolution=0.1)
    hi = schottky_bound(1.0, 0.5, 4.0, P16, resolution=0.1)
    assert 4.0 < lo <= hi


def test_schottky_base_points():
    pts = schottky_base_points(4.0)
    assert len(pts) == 14
    for a in pts:
        assert abs(a) > 0.05 - 1e-12 and abs(a - 1.0) > 0.05 - 1e-12
        assert a.imag > -1e-12  # conjugation symmetry halves the sweep


def test_schottky_rejects_bad_inputs():
    with pytest.raises(DomainError):
        schottky_bound(1.0, 1.5, 4.0, P16)  # r outside [0, R)
    with pytest.raises(DomainError):
        schottky_bound(0.0, 0.0, 4.0, P16)


# ------------------------------------------------------------- estimators


def test_landau_estimate_identity():
    f = identity_map(unit_disc())
    assert abs(landau_radius_estimate(f) - 1.0) < 0.02


def test_bloch_estimate_identity():
    f = identity_map(unit_disc())
    assert abs(bloch_radius_estimate(f) - 1.0) < 0.05


def test_estimators_require_normalization():
    disc = unit_disc()
    with pytest.raises(ContractError):
        landau_radius_estimate(affine_map(0.0, 2.0, disc, disc))
    with pytest.raises(ContractError):
        bloch_radius_estimate(affine_map(0.0, 0.5, disc, disc))


def test_landau_bloch_catalog_normalized():
    for f in landau_bloch_catalog():
        assert abs(complex(f.eval(0j))) < 1e-6
        assert abs(abs(complex(f.deriv(0j))) - 1.0) < 1e-6


# --------------------------------------------------- supporting densities


def test_bloch_metric_density_point_value():
    f = identity_map(unit_disc())
    got = bloch_metric_density(f, 2.0, 0j, lambda w: 1.0 - abs(w))
    assert abs(got - 2.0 / 9.0) < 1e-15


def test_bloch_metric_density_window():
    f = identity_map(unit_disc())
    with pytest.raises(DomainError):
        bloch_metric_density(f, 1.0, 0j, lambda w: 0.5)
    with pytest.raises(ContractError):
        bloch_metric_density(f, 2.0, 0j, lambda w: 0.0)
    with pytest.raises(ContractError):
        bloch_metric_density(f, 2.0, 0j, lambda w: -0.1)


def test_landau_point_metric_curvature():
    m = landau_point_metric(1.0 + 0j, 5.0)
    z = 1.3 + 0.2j
    assert bool(m.domain.contains(z))
    assert abs(gauss_curvature(m, z, mode="analytic") + 1.0) < 1e-15
    assert abs(gauss_curvature(m, z) + 1.0) < 1e-6
    assert not bool(m.domain.contains(1.0 + 0j))
    assert not bool(m.domain.contains(1.0 + 5.0j))  # beyond C/e


def test_landau_target_metric_density():
    m = landau_target_metric(unit_disc(), 5.0)
    d = 0.5
    want = 0.5 / (d * math.log(5.0 / d)) ** 2
    assert abs(float(m.density(0.5 + 0j)) - want) < 1e-12


def test_landau_supporting_check_passes():
    rep = landau_supporting_check()
    assert rep.passed
    assert rep.check_name == "landau-supporting"
    assert rep.params["window_e_L_below_C"]
    assert rep.worst_violation <= 1e-9


def test_landau_supporting_check_window_fail():
    rep = landau_supporting_check(C=2.0)
    assert not rep.passed
    assert rep.params["stage"] == "window"
    assert rep.worst_violation == math.inf


# ----------------------------------------------------------------- catalogs


def test_witness_catalogs_shape():
    assert len(ahlfors_witnesses()) == 10
    ws = schottky_witnesses()
    assert len(ws) == 10
    for f in ws:
        w0 = complex(f.eval(0j))
        assert abs(w0) > 1e-9 and abs(w0 - 1.0) > 1e-9
