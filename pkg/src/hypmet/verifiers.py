"""Theorem-level verification suites over sampled points and pairs.

Every check returns a VerificationReport. Reports are deterministic in
(seed, params): the samplers are Halton streams with a seeded rotation, so
growing the sample count only appends points.
"""

from __future__ import annotations

import math
from typing import Callable, List, Tuple

import numpy as np

from .distances import poincare_distance
from .maps import HolomorphicMap, automorphism_map, blaschke_product, holomorphic_map
from .metrics import ConformalMetric, pullback
from .mobius import DiscAutomorphism
from .domains import unit_disc
from .reporting import VerificationReport, make_report
from .sampling import disc_pairs, disc_samples

# near-equality threshold for the rigidity-case flag: a worst violation in
# (-1e-7, tol] is reported as near_equality, never as a proof of automorphy
NEAR_EQUALITY = -1e-7


def _witness_point(z) -> dict:
    return {"z": complex(z)}


def schwarz_check(f: HolomorphicMap, samples: int = 500, seed: int = 0,
                  tol: float = 1e-9) -> VerificationReport:
    """|f(z)| <= |z| on the disc and |f'(0)| <= 1 for maps fixing 0."""
    f0 = complex(f.eval(0j))
    if abs(f0) > 1e-12:
        return make_report(
            check_name="schwarz-precondition",
            params={"map": f.name, "f0": f0, "stage": "precondition"},
            sample_count=0,
            worst_violation=abs(f0),
            worst_witness=_witness_point(0j),
            tolerance=1e-12,
            seed=seed,
        )
    z = disc_samples(samples, seed=seed)
    fz = np.asarray(f.eval(z))
    viol = np.abs(fz) - np.abs(z)
    k = int(np.argmax(viol))
    dviol = abs(complex(f.deriv(0j))) - 1.0
    worst = max(float(viol[k]), dviol)
    witness = _witness_point(z[k]) if viol[k] >= dviol else _witness_point(0j)
    return make_report(
        check_name="schwarz",
        params={"map": f.name,
                "near_equality": bool(NEAR_EQUALITY < worst <= tol)},
        sample_count=samples,
        worst_violation=worst,
        worst_witness=witness,
        tolerance=tol,
        seed=seed,
    )


def schwarz_pick_check(f: HolomorphicMap, pair_samples: int = 400, seed: int = 0,
                       tol: float = 1e-9) -> VerificationReport:
    """Distance contraction rho(f(p), f(q)) <= rho(p, q) and the derivative
    form |f'(z)| (1 - |z|^2) <= 1 - |f(z)|^2 over sampled pairs."""
    p, q = disc_pairs(pair_samples, seed=seed)
    fp = np.asarray(f.eval(p))
    fq = np.asarray(f.eval(q))
    if np.any(np.abs(fp) >= 1.0) or np.any(np.abs(fq) >= 1.0):
        bad = p[np.abs(fp) >= 1.0]
        return make_report(
            check_name="schwarz-pick-precondition",
            params={"map": f.name, "stage": "precondition"},
            sample_count=pair_samples,
            worst_violation=math.inf,
            worst_witness=_witness_point(bad[0] if bad.size else q[0]),
            tolerance=tol,
            seed=seed,
        )
    dviol = poincare_distance(fp, fq) - poincare_distance(p, q)
    # derivative inequality in product form to avoid the boundary blowup
    deriv_lhs = np.abs(np.asarray(f.deriv(p))) * (1.0 - np.abs(p) ** 2)
    deriv_rhs = 1.0 - np.abs(fp) ** 2
    gviol = deriv_lhs - deriv_rhs
    kd = int(np.argmax(dviol))
    kg = int(np.argmax(gviol))
    worst = max(float(dviol[kd]), float(gviol[kg]))
    witness = ({"p": complex(p[kd]), "q": complex(q[kd])}
               if dviol[kd] >= gviol[kg] else _witness_point(p[kg]))
    return make_report(
        check_name="schwarz-pick",
        params={"map": f.name,
                "near_equality": bool(NEAR_EQUALITY < worst <= tol)},
        sample_count=pair_samples,
        worst_violation=worst,
        worst_witness=witness,
        tolerance=tol,
        seed=seed,
    )


def contraction_check(m1: ConformalMetric, m2: ConformalMetric, f: HolomorphicMap,
                      d1: Callable, d2: Callable, pair_samples: int = 200,
                      seed: int = 0, tol: float = 1e-9) -> VerificationReport:
    """d2(f(x), f(y)) <= d1(x, y) under the pullback hypothesis
    f^*(ds2^2) <= ds1^2, which is checked pointwise first."""
    p, q = disc_pairs(pair_samples, seed=seed)
    pulled = pullback(m2, f)
    base = np.asarray(m1.density(p), dtype=float)
    hyp = np.asarray(pulled.density(p), dtype=float) - base
    kh = int(np.argmax(hyp))
    if hyp[kh] > 1e-9 * (1.0 + abs(float(base[kh]))):
        return make_report(
            check_name="contraction-hypothesis",
            params={"map": f.name, "stage": "hypothesis",
                    "metric1": m1.name, "metric2": m2.name},
            sample_count=pair_samples,
            worst_violation=float(hyp[kh]),
            worst_witness=_witness_point(p[kh]),
            tolerance=0.0,
            seed=seed,
        )
    viol = np.asarray(d2(f.eval(p), f.eval(q))) - np.asarray(d1(p, q))
    k = int(np.argmax(viol))
    return make_report(
        check_name="contraction",
        params={"map": f.name, "metric1": m1.name, "metric2": m2.name},
        sample_count=pair_samples,
        worst_violation=float(viol[k]),
        worst_witness={"p": complex(p[k]), "q": complex(q[k])},
        tolerance=tol,
        seed=seed,
    )


def schwarz_catalog() -> List[HolomorphicMap]:
    """Maps fixing the origin, for the basic contraction check."""
    disc = unit_disc()
    zsq = holomorphic_map(lambda z: z * z, lambda z: 2 * z, disc, disc, (0j,), "z^2")
    half = holomorphic_map(lambda z: 0.5 * z, lambda z: 0.5 + 0j * z, disc, disc, (), "z/2")
    rot = automorphism_map(DiscAutomorphism(rotation_angle=math.pi / 3))
    bl = blaschke_product([0j, 0.4 + 0.2j])
    cube = holomorphic_map(lambda z: z**3, lambda z: 3 * z**2, disc, disc, (0j,), "z^3")
    return [zsq, half, rot, bl, cube]


def disc_map_catalog() -> List[HolomorphicMap]:
    """Self-maps of the disc, not necessarily centered."""
    disc = unit_disc()
    cat = [
        automorphism_map(DiscAutomorphism()),
        automorphism_map(DiscAutomorphism(rotation_angle=1.0, mobius_center=0.3 - 0.2j)),
        automorphism_map(DiscAutomorphism(rotation_angle=-2.2, mobius_center=-0.5j)),
        holomorphic_map(lambda z: z * z, lambda z: 2 * z, disc, disc, (0j,), "z^2"),
        holomorphic_map(lambda z: 0.5 * z, lambda z: 0.5 + 0j * z, disc, disc, (), "z/2"),
        holomorphic_map(lambda z: 0.3 + 0.4 * z, lambda z: 0.4 + 0j * z, disc, disc, (),
                        "0.3+0.4z"),
        blaschke_product([0.2 + 0.1j, -0.4j]),
        blaschke_product([0.5, -0.3 + 0.3j, 0.1j], phase=np.exp(0.7j)),
    ]
    return cat


def random_blaschke_catalog(count: int, seed: int = 0,
                            max_degree: int = 3) -> List[HolomorphicMap]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        deg = int(rng.integers(1, max_degree + 1))
        zeros = 0.7 * np.sqrt(rng.random(deg)) * np.exp(2j * np.pi * rng.random(deg))
        phase = np.exp(2j * np.pi * rng.random())
        out.append(blaschke_product(zeros, phase=phase))
    return out
