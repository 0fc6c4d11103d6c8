"""End-to-end analysis: ideal and one-parameter subgroup in, stability report out."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from hilbstab import kernels
from hilbstab.algebra import Ideal
from hilbstab.groebner import FlatLimit, OneParameterSubgroup, flat_limit
from hilbstab.hilbert import (
    HilbertProfile,
    NonGeometricProfile,
    default_m_max,
    hilbert_function,
    hilbert_polynomial,
)
from hilbstab.oracle import hilbert_function_linear_algebra
from hilbstab.stability import (
    IndependenceResult,
    StabilityReport,
    WeightProfile,
    chow_weight_leading,
    cm_weight,
    f1_via_expansion,
    futaki_F1,
    verify_m_independence,
    weight_profile,
    weight_table,
)

log = logging.getLogger(__name__)

LIFT_SPAN = 5
FLATNESS_M = 12


class InvariantViolation(RuntimeError):
    """A mathematical identity that must hold exactly failed."""


@dataclass
class Analysis:
    ideal: Ideal
    lam: OneParameterSubgroup
    flat: FlatLimit
    hilbert: HilbertProfile
    weights: WeightProfile
    report: StabilityReport
    independence: IndependenceResult
    verdicts: dict[str, str] = field(default_factory=dict)
    m_max: int = 0
    backend: str = ""
    fast_path: bool = True

    @property
    def ok(self) -> bool:
        return all(v != "fail" for v in self.verdicts.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.verdicts.items() if v == "fail"]


def ensure_weights(analysis: Analysis, upto: int) -> None:
    """Extend the weight table so that it covers 0..upto."""
    missing = [m for m in range(upto + 1) if m not in analysis.weights.values]
    if missing:
        values, counts = weight_table(analysis.flat.lead, analysis.lam, missing,
                                      _backend(analysis.fast_path))
        analysis.weights.values.update(values)
        analysis.weights.counts.update(counts)


def _backend(fast_path: bool) -> str | None:
    return None if fast_path else "python"


def lift_range(hp: HilbertProfile, wp: WeightProfile, span: int = LIFT_SPAN) -> range:
    start = max(hp.onset_m0, wp.onset_m0)
    return range(start, start + span)


def analyze(ideal: Ideal, lam, m_max: int | None = None, fast_path: bool = True,
            cross_check: bool = False, lift_span: int = LIFT_SPAN) -> Analysis:
    """Run flat limit, Hilbert profile, weight profile and every F1 route.

    Verdicts are ``"pass"``, ``"fail"`` or ``"skipped"``; a failing verdict
    means an exact identity was violated and should be treated as a bug.
    """
    if not isinstance(lam, OneParameterSubgroup):
        lam = OneParameterSubgroup(tuple(lam))
    flat = flat_limit(ideal, lam)
    M = flat.lead
    if m_max is None:
        m_max = default_m_max(M)
    backend = _backend(fast_path)
    hp = hilbert_polynomial(M, m_max, fast_path)
    if hp.dim_n < 0:
        raise NonGeometricProfile("the ideal defines the empty scheme")
    n, d, mu = hp.dim_n, hp.degree_d, hp.mu
    wp = weight_profile(M, lam, n, m_max, backend)

    F1 = futaki_F1(wp, hp)
    w_cm = cm_weight(F1, d, n)
    ms = lift_range(hp, wp, lift_span)
    need = ms[-1] + n + 1
    if need > m_max:
        extra, counts = weight_table(M, lam, range(m_max + 1, need + 1), backend)
        wp.values.update(extra)
        wp.counts.update(counts)
    indep = verify_m_independence(wp.values, n, mu, wp.a(n + 1), wp.a(n), ms, d=d,
                                  onset=wp.onset_m0)
    stable = range(max(hp.onset_m0, wp.onset_m0), m_max + 1)
    F1_exp = f1_via_expansion(wp.values, hp.values, stable)
    report = StabilityReport(
        n=n, d=d, mu=mu, a_top=wp.a(n + 1), a_sub=wp.a(n), F1=F1, w_cm=w_cm,
        lift_table=dict(indep.table), chow_top=chow_weight_leading(wp, n),
        F1_expansion=F1_exp, lift_target=indep.target)

    verdicts = {
        "m_independence": "pass" if indep.passed else "fail",
        "route_agreement": "pass" if F1 == F1_exp == w_cm / (2 * d * (n + 1)) else "fail",
        "weight_counts_match_hilbert": "pass" if all(
            wp.counts[m] == hp.values[m] for m in hp.values) else "fail",
    }
    if cross_check:
        verdicts.update(_cross_checks(ideal, M, hp, m_max))
    else:
        verdicts["hilbert_paths"] = "skipped"
        verdicts["flatness"] = "skipped"
    for name, verdict in verdicts.items():
        if verdict == "fail":
            log.error("invariant %s failed for lambda=%s", name, lam.weights)
    return Analysis(ideal, lam, flat, hp, wp, report, indep, verdicts, m_max,
                    "python" if not fast_path else kernels.BACKEND, fast_path)


def _cross_checks(ideal: Ideal, M, hp: HilbertProfile, m_max: int) -> dict[str, str]:
    top = min(m_max, FLATNESS_M)
    paths_ok = all(
        hilbert_function(M, m, "enumerate", "python") == hilbert_function(M, m, "recursive")
        == hp.values[m] for m in range(m_max + 1))
    flat_ok = all(
        hilbert_function_linear_algebra(ideal, m) == hp.values[m] for m in range(top + 1))
    return {"hilbert_paths": "pass" if paths_ok else "fail",
            "flatness": "pass" if flat_ok else "fail"}


def fraction_str(x) -> str:
    """Exact "p/q" form, always with a denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
