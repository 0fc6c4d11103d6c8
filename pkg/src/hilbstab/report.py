"""Job files in, JSON reports out.

A job file looks like::

    {"name": "conic-two-lines",
     "num_vars": 3,
     "generators": ["x0*x2 - x1^2"],
     "lambda_weights": [2, -1, -1],
     "m_max": null,
     "options": {"fast_path": true, "cross_check": false}}

Every number in a report is an exact string: integers in decimal,
rationals as ``"p/q"`` (always with a denominator).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from hilbstab.algebra import HomogeneityError, Ideal, format_polynomial
from hilbstab.parser import ParseError, parse_polynomial
from hilbstab.pipeline import Analysis, analyze, fraction_str

REPORT_VERSION = "hilbstab.report.v1"

# rational fields compared against goldens, by dotted path in the report
GOLDEN_FIELDS = (
    "stability.n", "stability.d", "stability.mu", "stability.a_top", "stability.a_sub",
    "stability.F1", "stability.w_cm", "stability.lift_constant", "stability.chow_top",
    "hilbert.poly_coeffs", "weights.a_coeffs", "flat_limit.lead_ideal",
)


class JobError(ValueError):
    """Malformed job file (bad JSON, bad fields, parse or homogeneity errors)."""


@dataclass
class JobSpec:
    num_vars: int
    generators: list[str]
    lambda_weights: list[int]
    m_max: int | None = None
    fast_path: bool = True
    cross_check: bool = False
    name: str = ""
    raw: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_dict(cls, data: dict, name: str = "") -> JobSpec:
        if not isinstance(data, dict):
            raise JobError("job must be a JSON object")
        try:
            num_vars = data["num_vars"]
            generators = data["generators"]
            weights = data["lambda_weights"]
        except KeyError as exc:
            raise JobError(f"missing field {exc.args[0]!r}") from None
        if not isinstance(num_vars, int) or isinstance(num_vars, bool) or num_vars < 1:
            raise JobError("num_vars must be a positive integer")
        if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
            raise JobError("generators must be a list of expression strings")
        if (not isinstance(weights, list)
                or not all(isinstance(w, int) and not isinstance(w, bool) for w in weights)):
            raise JobError("lambda_weights must be a list of integers")
        if len(weights) != num_vars:
            raise JobError(f"lambda_weights has {len(weights)} entries, expected {num_vars}")
        m_max = data.get("m_max")
        if m_max is not None and (not isinstance(m_max, int) or m_max < 0):
            raise JobError("m_max must be a non-negative integer or null")
        options = data.get("options") or {}
        return cls(num_vars, list(generators), list(weights), m_max,
                   bool(options.get("fast_path", True)), bool(options.get("cross_check", False)),
                   data.get("name", name), dict(data))

    def ideal(self) -> Ideal:
        polys = []
        for i, text in enumerate(self.generators):
            try:
                polys.append(parse_polynomial(text, self.num_vars))
            except ParseError as exc:
                raise JobError(f"generator {i}: {exc}") from exc
        try:
            return Ideal(polys, self.num_vars)
        except HomogeneityError as exc:
            raise JobError(f"homogeneity error: {exc}") from exc

    def echo(self) -> dict:
        return {
            "name": self.name,
            "num_vars": self.num_vars,
            "generators": list(self.generators),
            "lambda_weights": list(self.lambda_weights),
            "m_max": self.m_max,
            "options": {"fast_path": self.fast_path, "cross_check": self.cross_check},
        }


def load_job(path: str | Path) -> JobSpec:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise JobError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise JobError(f"{path}: invalid JSON ({exc})") from exc
    return JobSpec.from_dict(data, name=job_name(path))


def job_name(path: Path) -> str:
    name = path.name
    for suffix in (".job.json", ".json"):
        if name.endswith(suffix):
            return name[: -len(suffix)]
    return name


def run_job(job: JobSpec, fast_path: bool | None = None,
            cross_check: bool | None = None) -> Analysis:
    return analyze(
        job.ideal(), job.lambda_weights, job.m_max,
        fast_path=job.fast_path if fast_path is None else fast_path,
        cross_check=job.cross_check if cross_check is None else cross_check)


def _table(values: dict) -> dict[str, str]:
    return {str(m): str(v) for m, v in sorted(values.items())}


def build_report(job: JobSpec, analysis: Analysis, seconds: float | None = None) -> dict[str, Any]:
    hp, wp, rep = analysis.hilbert, analysis.weights, analysis.report
    constant = analysis.independence.constant
    out = {
        "version": REPORT_VERSION,
        "job": job.echo(),
        "backend": analysis.backend,
        "m_max": str(analysis.m_max),
        "flat_limit": {
            "groebner_basis": [format_polynomial(g) for g in analysis.flat.basis.generators],
            "initial_forms": [format_polynomial(g) for g in analysis.flat.initial_forms],
            "lead_ideal": str(analysis.flat.lead),
        },
        "hilbert": {
            "values": _table(hp.values),
            "poly_coeffs": [fraction_str(c) for c in hp.poly_coeffs],
            "onset": str(hp.onset_m0),
            "n": str(hp.dim_n),
            "d": str(hp.degree_d),
            "mu": fraction_str(hp.mu),
        },
        "weights": {
            "values": _table(wp.values),
            "a_coeffs": [fraction_str(c) for c in wp.a_coeffs],
            "onset": str(wp.onset_m0),
        },
        "stability": {
            "n": str(rep.n),
            "d": str(rep.d),
            "mu": fraction_str(rep.mu),
            "a_top": fraction_str(rep.a_top),
            "a_sub": fraction_str(rep.a_sub),
            "F1": fraction_str(rep.F1),
            "F1_expansion": fraction_str(rep.F1_expansion),
            "w_cm": fraction_str(rep.w_cm),
            "lift_table": {str(m): fraction_str(v) for m, v in sorted(rep.lift_table.items())},
            "lift_constant": fraction_str(constant) if constant is not None else None,
            "lift_target": fraction_str(rep.lift_target),
            "chow_top": fraction_str(rep.chow_top),
            "chow_coefficient": fraction_str(rep.eq_chow_coefficient),
        },
        "verdicts": dict(analysis.verdicts),
        "timing": {"seconds": f"{seconds:.6f}" if seconds is not None else None},
    }
    return out


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def lookup(report: dict, dotted: str):
    node: Any = report
    for part in dotted.split("."):
        if not isinstance(node, dict) or part not in node:
            return None
        node = node[part]
    return node


def golden_subset(report: dict) -> dict[str, Any]:
    return {key: lookup(report, key) for key in GOLDEN_FIELDS}


def compare_golden(report: dict, golden: dict) -> list[str]:
    """Field names whose exact string value differs from the golden."""
    return [key for key, expected in golden.items() if lookup(report, key) != expected]
