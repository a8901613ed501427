"""Numerical toolkit for conformal pseudometrics on plane domains.

Poincare geometry of the unit disc (distances, geodesics, balls), path
lengths and Gauss curvature for conformal densities, an explicit complete
metric on the twice punctured plane with a calibration certificate, the
classical contraction principles as sampled verification suites, Kobayashi
chain bounds, and a mesh distance oracle. The `hyp` console script exposes
figures and the suites.
"""

from .distances import (geodesic, inner_length, mobius_distance,
                        poincare_ball, poincare_distance,
                        poincare_distance_forms)
from .domains import (DomainDescriptor, complex_plane, disc_of_radius,
                      punctured_plane, twice_punctured_plane, unit_disc)
from .errors import (CalibrationError, ContractError, DegeneratePathError,
                     DomainError, HypmetError, SearchBudgetError,
                     UnreachableError)
from .kobayashi import (CatalogDomain, ChainLink, DiscChain, SearchConfig,
                        catalog_domains, cauchy_escape_demo, chain_value,
                        kobayashi_upper_bound, punctured_bidisc_bound,
                        push_chain)
from .maps import (HolomorphicMap, affine_map, automorphism_map,
                   blaschke_product, compose_maps, constant_map,
                   holomorphic_map, identity_map, polynomial_map)
from .mesh import (MetricMesh, ball_extent, build_metric_mesh, mesh_distance,
                   multi_source_ball_extents)
from .metrics import (ConformalMetric, constant_metric, gauss_curvature,
                      poincare_metric, pullback, verify_supporting)
from .mobius import DiscAutomorphism, apply_automorphism, artanh, \
    compose_automorphisms, invert_automorphism, mobius
from .paths import (PathLengthInfo, PathSpec, circular_arc, concat_paths,
                    line_segment, map_path, path_length, reverse_path)
from .picard import (GrowthReport, PpcMetricParams, ahlfors_check,
                     ahlfors_witnesses, bloch_metric_density,
                     bloch_radius_estimate, calibrate_C, completeness_probe,
                     curvature_limits, euclidean_control_probe,
                     landau_bloch_catalog, landau_point_metric,
                     landau_radius_bound, landau_radius_estimate,
                     landau_supporting_check, landau_target_metric,
                     little_picard_derivative_bound, ppc_curvature,
                     ppc_density, ppc_metric, schottky_bound,
                     schottky_witnesses)
from .reporting import VerificationReport, make_report, to_json
from .sampling import disc_pairs, disc_samples, halton
from .verifiers import (contraction_check, disc_map_catalog,
                        random_blaschke_catalog, schwarz_catalog,
                        schwarz_check, schwarz_pick_check)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "HypmetError", "DomainError", "ContractError", "DegeneratePathError",
    "CalibrationError", "UnreachableError", "SearchBudgetError",
    # domains and maps
    "DomainDescriptor", "unit_disc", "disc_of_radius", "complex_plane",
    "punctured_plane", "twice_punctured_plane", "HolomorphicMap",
    "holomorphic_map", "identity_map", "constant_map", "affine_map",
    "polynomial_map", "automorphism_map", "blaschke_product", "compose_maps",
    "DiscAutomorphism", "mobius", "artanh", "apply_automorphism",
    "invert_automorphism", "compose_automorphisms",
    # metrics and paths
    "ConformalMetric", "poincare_metric", "constant_metric", "pullback",
    "gauss_curvature", "verify_supporting", "PathSpec", "PathLengthInfo",
    "line_segment", "circular_arc", "concat_paths", "map_path",
    "reverse_path", "path_length",
    # distances
    "mobius_distance", "poincare_distance", "poincare_distance_forms",
    "geodesic", "poincare_ball", "inner_length",
    # mesh
    "MetricMesh", "build_metric_mesh", "mesh_distance", "ball_extent",
    "multi_source_ball_extents",
    # twice punctured plane
    "PpcMetricParams", "GrowthReport", "ppc_density", "ppc_curvature",
    "ppc_metric", "curvature_limits", "calibrate_C", "completeness_probe",
    "euclidean_control_probe", "ahlfors_check", "ahlfors_witnesses",
    "little_picard_derivative_bound", "landau_radius_bound", "schottky_bound",
    "schottky_witnesses", "landau_radius_estimate", "bloch_radius_estimate",
    "bloch_metric_density", "landau_point_metric", "landau_target_metric",
    "landau_supporting_check", "landau_bloch_catalog",
    # kobayashi
    "ChainLink", "DiscChain", "CatalogDomain", "SearchConfig", "chain_value",
    "push_chain", "catalog_domains", "kobayashi_upper_bound",
    "punctured_bidisc_bound", "cauchy_escape_demo",
    # verification
    "VerificationReport", "make_report", "to_json", "halton", "disc_samples",
    "disc_pairs", "schwarz_check", "schwarz_pick_check", "contraction_check",
    "schwarz_catalog", "disc_map_catalog", "random_blaschke_catalog",
]
