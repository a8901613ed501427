"""Command line front end: figures, verification suites, distances,
calibration, Kobayashi bounds.

Every command prints one JSON document (sorted keys, fixed float format) so
runs diff cleanly. Exit codes: 0 all checks passed, 1 a check or certificate
failed, 2 usage error, 3 numeric domain error (puncture hit, unreachable
mesh target, bad point).

Defaults may be supplied through a flat `key = value` file named by the
HYP_CONFIG environment variable; explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import hashlib
import math
import os
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from . import __version__
from .distances import poincare_distance
from .domains import twice_punctured_plane, unit_disc
from .errors import (CalibrationError, ContractError, DegeneratePathError,
                     DomainError, SearchBudgetError, UnreachableError)
from .figures import figure_catalog, render_figure
from .kobayashi import (SearchConfig, catalog_domains, cauchy_escape_demo,
                        kobayashi_upper_bound, punctured_bidisc_bound)
from .mesh import mesh_distance
from .metrics import poincare_metric
from .picard import (ahlfors_check, ahlfors_witnesses, calibrate_C,
                     completeness_probe, euclidean_control_probe,
                     landau_supporting_check, ppc_metric, schottky_bound,
                     schottky_witnesses)
from .reporting import VerificationReport, make_report, to_json
from .sampling import disc_pairs
from .verifiers import disc_map_catalog, schwarz_catalog, schwarz_check, schwarz_pick_check

SUITES = ("schwarz", "schwarz-pick", "ahlfors-disc", "ahlfors-ppc", "landau",
          "schottky", "kobayashi-disc", "kobayashi-plane", "bidisc",
          "completeness")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: Optional[int] = None
    resolution: Optional[float] = None
    max_links: int = 4
    out: Optional[str] = None

    def as_dict(self) -> dict:
        return {"seed": self.seed, "samples": self.samples,
                "resolution": self.resolution, "max_links": self.max_links,
                "out": self.out}


_CONFIG_COERCERS = {
    "seed": int,
    "samples": int,
    "resolution": float,
    "max_links": int,
    "out": str,
}


def load_env_config() -> Dict[str, object]:
    """Flat `key = value` file pointed to by HYP_CONFIG; '#' comments."""
    path = os.environ.get("HYP_CONFIG")
    if not path:
        return {}
    try:
        text = open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read HYP_CONFIG file {path!r}: {exc}")
    out: Dict[str, object] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{ln}: expected 'key = value', got {raw!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        coerce = _CONFIG_COERCERS.get(key)
        if coerce is None:
            continue  # unknown keys are reserved, not fatal
        try:
            out[key] = coerce(val)
        except ValueError:
            raise UsageError(f"{path}:{ln}: bad value for {key}: {val!r}")
    return out


def _effective_config(args) -> RunConfig:
    env = load_env_config()

    def pick(name, default):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        if name in env:
            return env[name]
        return default

    return RunConfig(
        seed=pick("seed", 0),
        samples=pick("samples", None),
        resolution=pick("resolution", None),
        max_links=pick("max_links", 4),
        out=pick("out", None),
    )


def _parse_point(text: str):
    try:
        if "," in text:
            return tuple(complex(part.strip()) for part in text.split(","))
        return complex(text.strip())
    except ValueError:
        raise UsageError(
            f"cannot parse point {text!r}; use complex literals like 0.3+0.4j "
            "(comma-separated for bidisc points; wrap values with a leading "
            "minus in parentheses, e.g. '(-0.2+0.1j)')")


# --------------------------------------------------------------------------
# verification suites


def _suite_schwarz(cfg: RunConfig) -> List[VerificationReport]:
    n = cfg.samples or 500
    return [schwarz_check(f, samples=n, seed=cfg.seed) for f in schwarz_catalog()]


def _suite_schwarz_pick(cfg: RunConfig) -> List[VerificationReport]:
    n = cfg.samples or 400
    return [schwarz_pick_check(f, pair_samples=n, seed=cfg.seed)
            for f in disc_map_catalog()]


def _suite_ahlfors_disc(cfg: RunConfig) -> List[VerificationReport]:
    n = cfg.samples or 400
    m = poincare_metric()
    return [ahlfors_check(m, -1.0, f, samples=n, seed=cfg.seed)
            for f in disc_map_catalog()]


def _suite_ahlfors_ppc(cfg: RunConfig) -> List[VerificationReport]:
    n = cfg.samples or 400
    params = calibrate_C()
    m = ppc_metric(params)
    return [ahlfors_check(m, -1.0, f, samples=n, seed=cfg.seed)
            for f in ahlfors_witnesses(params)]


def _suite_landau(cfg: RunConfig) -> List[VerificationReport]:
    return [landau_supporting_check(samples=cfg.samples or 256, seed=cfg.seed)]


def _witness_sup(f, r: float, n: int = 256) -> float:
    z = r * np.exp(2j * np.pi * np.arange(n) / n)
    vals = np.abs(np.asarray(f.eval(z)))
    return float(max(np.max(vals), abs(complex(f.eval(0j)))))


def _suite_schottky(cfg: RunConfig) -> List[VerificationReport]:
    params = calibrate_C()
    res = cfg.resolution or 0.05
    M = schottky_bound(1.0, 0.5, 4.0, params, resolution=res)
    sups = [(_witness_sup(f, 0.5), f.name) for f in schottky_witnesses()]
    worst, name = max(sups)
    reports = [
        make_report(
            check_name="schottky-domination",
            params={"R": 1.0, "r": 0.5, "C_mag": 4.0, "resolution": res,
                    "bound": M},
            sample_count=len(sups),
            worst_violation=worst - M,
            worst_witness={"map": name, "sup": worst},
            tolerance=1e-2,
            seed=cfg.seed,
        ),
        make_report(
            check_name="schottky-degenerate-r",
            params={"R": 1.0, "r": 0.0, "C_mag": 4.0},
            sample_count=1,
            worst_violation=abs(schottky_bound(1.0, 0.0, 4.0, params) - 4.0),
            worst_witness={"r": 0.0},
            tolerance=0.0,
            seed=cfg.seed,
        ),
    ]
    return reports


def _suite_kobayashi_disc(cfg: RunConfig) -> List[VerificationReport]:
    n = cfg.samples or 100
    p, q = disc_pairs(n, seed=cfg.seed)
    sc = SearchConfig(max_links=cfg.max_links, seed=cfg.seed)
    worst = -math.inf
    witness = {}
    for pi, qi in zip(p, q):
        val, _ = kobayashi_upper_bound("disc", complex(pi), complex(qi), sc)
        err = abs(val - poincare_distance(complex(pi), complex(qi)))
        if err > worst:
            worst, witness = err, {"p": complex(pi), "q": complex(qi)}
    return [make_report("kobayashi-disc", {"pairs": n}, n, worst, witness,
                        1e-8, cfg.seed)]


def _suite_kobayashi_plane(cfg: RunConfig) -> List[VerificationReport]:
    pairs = [(0j, 1e6 + 0j), (1 + 2j, -3 + 0j), (5 + 0j, 5 + 1000j),
             (-2j, 7 + 7j)]
    sc = SearchConfig(max_links=cfg.max_links, seed=cfg.seed)
    worst = -math.inf
    witness = {}
    for p, q in pairs:
        val, _ = kobayashi_upper_bound("plane", p, q, sc)
        if val > worst:
            worst, witness = val, {"p": p, "q": q, "value": val}
    return [make_report("kobayashi-plane", {"pairs": len(pairs)}, len(pairs),
                        worst, witness, 1e-6, cfg.seed)]


def _suite_bidisc(cfg: RunConfig) -> List[VerificationReport]:
    reports = []
    n = 10
    val, _ = punctured_bidisc_bound(n)
    reports.append(make_report(
        "punctured-bidisc-chain", {"n": n, "expected": 2.0 ** (1 - n)}, 1,
        abs(val - 2.0 ** (1 - n)), {"value": val}, 1e-12, cfg.seed))
    sc = SearchConfig(max_links=cfg.max_links, seed=cfg.seed)
    pairs = [((0.3 + 0j, 0.1j), (-0.2j, 0.5 + 0j)),
             ((0.0j, 0.4 + 0j), (0.6j, -0.1 + 0j)),
             ((0.25 + 0.25j, -0.5j), (-0.7 + 0j, 0.1 + 0.1j))]
    worst = -math.inf
    witness = {}
    for p, q in pairs:
        val, _ = kobayashi_upper_bound("bidisc", p, q, sc)
        exact = max(poincare_distance(p[0], q[0]), poincare_distance(p[1], q[1]))
        err = abs(val - exact)
        if err > worst:
            worst, witness = err, {"p": p, "q": q}
    reports.append(make_report("bidisc-diagonal", {"pairs": len(pairs)},
                               len(pairs), worst, witness, 1e-9, cfg.seed))
    demo = cauchy_escape_demo(10)
    reports.append(make_report(
        "cauchy-escape", {"rows": len(demo["rows"]),
                          "origin_in_domain": demo["origin_in_domain"]},
        len(demo["rows"]), demo["tail_bound"] - demo["tail_threshold"],
        {"tail": demo["tail_bound"], "threshold": demo["tail_threshold"]},
        0.0, cfg.seed))
    return reports


def _suite_completeness(cfg: RunConfig) -> List[VerificationReport]:
    params = calibrate_C()
    reports = []
    for target in ("0", "1", "infinity"):
        rep = completeness_probe(params, target)
        resid = rep.fitted_growth["residual_rel_rms"]
        flag_term = -1.0 if rep.divergence_flag else 1.0
        reports.append(make_report(
            check_name=f"completeness-{target}",
            params={"target": target, "slope": rep.fitted_growth["slope"],
                    "residual_rel_rms": resid,
                    "divergence_flag": rep.divergence_flag},
            sample_count=len(rep.t_samples),
            worst_violation=max(flag_term, resid - 0.05),
            worst_witness={"final_length": rep.t_samples[-1][1]},
            tolerance=0.0,
            seed=cfg.seed,
        ))
    ctrl = euclidean_control_probe()
    final = ctrl.t_samples[-1][1]
    reports.append(make_report(
        check_name="completeness-control",
        params={"target": "control", "divergence_flag": ctrl.divergence_flag},
        sample_count=len(ctrl.t_samples),
        worst_violation=max(1.0 if ctrl.divergence_flag else -1.0, final - 1.0),
        worst_witness={"final_length": final},
        tolerance=0.0,
        seed=cfg.seed,
    ))
    return reports


_SUITE_RUNNERS = {
    "schwarz": _suite_schwarz,
    "schwarz-pick": _suite_schwarz_pick,
    "ahlfors-disc": _suite_ahlfors_disc,
    "ahlfors-ppc": _suite_ahlfors_ppc,
    "landau": _suite_landau,
    "schottky": _suite_schottky,
    "kobayashi-disc": _suite_kobayashi_disc,
    "kobayashi-plane": _suite_kobayashi_plane,
    "bidisc": _suite_bidisc,
    "completeness": _suite_completeness,
}


# --------------------------------------------------------------------------
# commands


def cmd_figure(args, cfg: RunConfig):
    spec = figure_catalog()[args.name]
    svg = render_figure(spec)
    out = args.out or cfg.out or f"{spec.name}.svg"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    digest = hashlib.sha256(svg.encode("utf-8")).hexdigest()
    report = {"figure": spec.name, "out": out, "bytes": len(svg.encode("utf-8")),
              "sha256": digest}
    return [report], True


def cmd_verify(args, cfg: RunConfig):
    reports = _SUITE_RUNNERS[args.suite](cfg)
    passed = all(r.passed for r in reports)
    return reports, passed


def cmd_distance(args, cfg: RunConfig):
    p = _parse_point(args.p)
    q = _parse_point(args.q)
    if not isinstance(p, complex) or not isinstance(q, complex):
        raise UsageError("distance expects scalar complex points")
    method = args.method
    report: Dict[str, object] = {"domain": args.domain, "p": p, "q": q,
                                 "method": method}
    if args.domain == "disc":
        if max(abs(p), abs(q)) >= 1.0:
            raise DomainError("disc points must satisfy |z| < 1")
        res = cfg.resolution or 0.02
        if method in ("closed", "both"):
            report["closed"] = poincare_distance(p, q)
        if method in ("mesh", "both"):
            report["mesh"] = mesh_distance(poincare_metric(), unit_disc(), p, q,
                                           resolution=res)
            report["resolution"] = res
        if method == "both":
            report["difference"] = abs(report["mesh"] - report["closed"])
    else:
        if method == "closed":
            raise UsageError("the twice punctured plane has no closed form; "
                             "use --method mesh")
        params = calibrate_C()
        res = cfg.resolution or 0.05
        half = max(math.sqrt(params.C - 1.0) + 1.0, abs(p) + 1.0, abs(q) + 1.0)
        report["mesh"] = mesh_distance(ppc_metric(params),
                                       twice_punctured_plane(), p, q,
                                       resolution=res,
                                       box=(-half, half, -half, half))
        report["resolution"] = res
        report["C"] = params.C
    return [report], True


def cmd_calibrate(args, cfg: RunConfig):
    rng = None
    if args.range:
        try:
            lo, hi = (float(part) for part in args.range.split(":", 1))
        except ValueError:
            raise UsageError(f"bad --range {args.range!r}; expected LO:HI")
        rng = (lo, hi)
    params = calibrate_C(search_range=rng)
    return [{"C": params.C, "certificate": params.certificate}], True


def cmd_kobayashi(args, cfg: RunConfig):
    p = _parse_point(args.p)
    q = _parse_point(args.q)
    sc = SearchConfig(max_links=cfg.max_links, seed=cfg.seed)
    value, chain = kobayashi_upper_bound(args.domain, p, q, sc)
    report = {
        "domain": args.domain,
        "p": p,
        "q": q,
        "value": value,
        "link_count": len(chain.links),
        "link_params": [link.a for link in chain.links],
        "link_names": [link.name for link in chain.links],
        "endpoints": list(chain.endpoints),
    }
    return [report], True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyp",
        description="Conformal pseudometric toolkit: figures, verification "
                    "suites, distances, calibration, Kobayashi bounds.",
        epilog="Points are complex literals (0.3+0.4j); bidisc points are "
               "comma-separated pairs. Wrap a value with a leading minus in "
               "parentheses so it is not mistaken for a flag: '(-0.5+0j)'.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_fig = sub.add_parser("figure", help="render a catalog figure to SVG")
    p_fig.add_argument("name", choices=sorted(figure_catalog()))
    p_fig.add_argument("--out", help="output path (default <name>.svg)")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=SUITES)
    p_ver.add_argument("--seed", type=int)
    p_ver.add_argument("--samples", type=int)
    p_ver.add_argument("--resolution", type=float)

    p_dist = sub.add_parser("distance", help="distance between two points")
    p_dist.add_argument("domain", choices=("disc", "ppc"))
    p_dist.add_argument("p")
    p_dist.add_argument("q")
    p_dist.add_argument("--method", choices=("closed", "mesh", "both"),
                        default="both")
    p_dist.add_argument("--resolution", type=float)

    p_cal = sub.add_parser("calibrate",
                           help="certify the twice-punctured-plane constant")
    p_cal.add_argument("--range", help="LO:HI filter for the C candidates")

    p_kob = sub.add_parser("kobayashi", help="chain upper bound for d(p, q)")
    p_kob.add_argument("domain", choices=sorted(catalog_domains()))
    p_kob.add_argument("p")
    p_kob.add_argument("q")
    p_kob.add_argument("--max-links", type=int, dest="max_links")
    p_kob.add_argument("--seed", type=int)

    return parser


_DISPATCH = {
    "figure": cmd_figure,
    "verify": cmd_verify,
    "distance": cmd_distance,
    "calibrate": cmd_calibrate,
    "kobayashi": cmd_kobayashi,
}


def _command_line(args) -> str:
    parts = [args.command]
    for attr in ("suite", "name", "domain", "p", "q"):
        val = getattr(args, attr, None)
        if val is not None:
            parts.append(str(val))
    return " ".join(parts)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _effective_config(args)
        reports, passed = _DISPATCH[args.command](args, cfg)
    except UsageError as exc:
        print(f"hyp: {exc}", file=sys.stderr)
        return 2
    except (DomainError, DegeneratePathError, UnreachableError) as exc:
        print(to_json({"tool_version": __version__,
                       "command": _command_line(args),
                       "error": {"type": type(exc).__name__,
                                 "message": str(exc)}}))
        return 3
    except (CalibrationError, SearchBudgetError, ContractError) as exc:
        print(to_json({"tool_version": __version__,
                       "command": _command_line(args),
                       "error": {"type": type(exc).__name__,
                                 "message": str(exc)}}))
        return 1
    envelope = {
        "tool_version": __version__,
        "command": _command_line(args),
        "config": cfg.as_dict(),
        "reports": reports,
    }
    print(to_json(envelope))
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
