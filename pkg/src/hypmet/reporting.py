"""Verification reports and their deterministic JSON serialization.

The JSON writer is hand-rolled so the byte output is a pure function of the
data: keys sorted, floats always printed with 17 significant digits,
non-finite floats as quoted strings. Complex numbers serialize as
{"im": ..., "re": ...} objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, is_dataclass, asdict
from typing import Any, Dict

import numpy as np


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    params: Dict[str, Any]
    sample_count: int
    worst_violation: float
    worst_witness: Dict[str, Any]
    tolerance: float
    passed: bool
    seed: int

    def as_dict(self) -> Dict[str, Any]:
        # external schema uses the key "pass"
        return {
            "check_name": self.check_name,
            "params": self.params,
            "sample_count": self.sample_count,
            "worst_violation": self.worst_violation,
            "worst_witness": self.worst_witness,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "seed": self.seed,
        }


def make_report(check_name: str, params: Dict[str, Any], sample_count: int,
                worst_violation: float, worst_witness: Dict[str, Any],
                tolerance: float, seed: int) -> VerificationReport:
    """Builds a report; the pass flag is always derived from the violation."""
    return VerificationReport(
        check_name=check_name,
        params=params,
        sample_count=int(sample_count),
        worst_violation=float(worst_violation),
        worst_witness=worst_witness,
        tolerance=float(tolerance),
        passed=bool(worst_violation <= tolerance),
        seed=int(seed),
    )


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"NaN"'
    if math.isinf(x):
        return '"Infinity"' if x > 0 else '"-Infinity"'
    return format(x, ".17g")


def _escape(s: str) -> str:
    out = []
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return "".join(out)


def to_json(obj, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, fixed float format."""
    pad = " " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        z = complex(obj)
        return to_json({"im": z.imag, "re": z.real}, indent)
    if isinstance(obj, str):
        return f'"{_escape(obj)}"'
    if isinstance(obj, VerificationReport):
        return to_json(obj.as_dict(), indent)
    if is_dataclass(obj) and not isinstance(obj, type):
        return to_json(asdict(obj), indent)
    if isinstance(obj, np.ndarray):
        return to_json(list(obj), indent)
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        inner = ",\n".join(
            f'{pad}  "{_escape(str(k))}": {to_json(v, indent + 2)}' for k, v in items
        )
        if not inner:
            return "{}"
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = ",\n".join(f"{pad}  {to_json(v, indent + 2)}" for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__} to report JSON")
