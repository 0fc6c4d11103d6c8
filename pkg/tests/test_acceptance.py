"""Exit criteria, each checked exactly (zero tolerance) on the shipped corpus.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per
criterion in the terminal summary.
"""

import time
from fractions import Fraction
from math import factorial

import pytest

from hilbstab.groebner import OneParameterSubgroup, flat_limit
from hilbstab.hilbert import hilbert_function, hilbert_polynomial
from hilbstab.oracle import hilbert_function_linear_algebra
from hilbstab.pipeline import analyze
from hilbstab.stability import binomial_sum, closed_form

from conftest import (
    CONIC,
    CORPUS,
    CORPUS_IDS,
    QUADRIC,
    QUARTIC,
    TWISTED_CUBIC,
    make_ideal,
    record,
)

RUNTIME_LIMIT = 10.0
BINOMIAL_LIMIT = 1.0


def test_corpus_shape():
    names = {c[0] for c in CORPUS}
    assert len(CORPUS) >= 6
    assert {"conic-two-lines", "conic-stabilizer", "conic-double-line",
            "twisted-cubic", "quadric-surface", "rational-normal-quartic"} <= names
    conic_lams = {c[3] for c in CORPUS if c[2] is CONIC}
    assert {(2, -1, -1), (1, 0, -1), (-2, 1, 1)} <= conic_lams


@pytest.mark.parametrize("entry", CORPUS, ids=CORPUS_IDS)
def test_criterion_1_lift_weight_is_m_independent(entry):
    name, nv, gens, lam = entry
    start = time.perf_counter()
    a = analyze(make_ideal(gens, nv), lam)
    elapsed = time.perf_counter() - start
    r = a.report
    values = list(r.lift_table.values())
    ms = sorted(r.lift_table)
    target = factorial(r.n + 1) * (2 * r.a_sub - r.mu * r.a_top)
    ok = (len(ms) >= 5
          and ms == list(range(ms[0], ms[0] + len(ms)))
          and ms[0] >= max(a.hilbert.onset_m0, a.weights.onset_m0)
          and len(set(values)) == 1
          and values[0] == target
          and values[0] == 2 * r.d * (r.n + 1) * r.F1
          and elapsed < RUNTIME_LIMIT)
    record(1, ok, f"{name}: A(m)={values[0]} over m={ms[0]}..{ms[-1]}, "
                  f"target={target}, {elapsed:.2f}s")
    assert ok


def test_criterion_2_conic_exact_values():
    ideal = make_ideal(CONIC, 3)
    checks = []

    a = analyze(ideal, (2, -1, -1))
    r = a.report
    checks.append(all(a.weights.values[m] == Fraction(m * m - m, 2) for m in a.weights.values))
    checks.append((r.a_top, r.a_sub, r.F1, r.w_cm) ==
                  (Fraction(1, 2), Fraction(-1, 2), Fraction(-3, 8), -3))
    checks.append(set(r.lift_table.values()) == {-3})

    a = analyze(ideal, (1, 0, -1))
    checks.append(all(v == 0 for v in a.weights.values.values()) and a.report.F1 == 0)

    a = analyze(ideal, (-2, 1, 1))
    r = a.report
    checks.append((r.a_top, r.a_sub, r.F1, r.w_cm) == (1, -1, Fraction(-3, 4), -6))
    ok = all(checks)
    record(2, ok, f"conic family checks {checks}")
    assert ok


def test_criterion_3_sign_calibration():
    ideal = make_ideal(CONIC, 3)
    f_two = analyze(ideal, (2, -1, -1)).report.F1
    f_double = analyze(ideal, (-2, 1, 1)).report.F1
    f_stab = analyze(ideal, (1, 0, -1)).report.F1
    ok = f_two < 0 and f_double < 0 and f_stab == 0
    record(3, ok, f"F1 two lines={f_two}, double line={f_double}, stabilizer={f_stab}")
    assert ok


def test_criterion_4_binomial_identity():
    start = time.perf_counter()
    bad = [(n, k, m) for n in range(9) for k in range(n + 2) for m in range(1, 51)
           if binomial_sum(n, k, m) != closed_form(n, k, m)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < BINOMIAL_LIMIT
    record(4, ok, f"{sum(n + 2 for n in range(9)) * 50} cases, {len(bad)} mismatches, "
                  f"{elapsed:.3f}s")
    assert ok


@pytest.mark.parametrize("entry", CORPUS, ids=CORPUS_IDS)
def test_criterion_5_route_agreement(entry):
    name, nv, gens, lam = entry
    r = analyze(make_ideal(gens, nv), lam).report
    via_cm = r.w_cm / (2 * r.d * (r.n + 1))
    ok = r.F1 == r.F1_expansion == via_cm
    record(5, ok, f"{name}: futaki={r.F1} expansion={r.F1_expansion} cm/(2d(n+1))={via_cm}")
    assert ok


@pytest.mark.parametrize("entry", CORPUS, ids=CORPUS_IDS)
def test_criterion_6_invariance(entry):
    name, nv, gens, lam = entry
    ideal = make_ideal(gens, nv)
    lam = OneParameterSubgroup(lam)
    base = analyze(ideal, lam).report.F1
    shifted = {c: analyze(ideal, lam.shifted(c)).report.F1 for c in range(-3, 4)}
    scaled = {c: analyze(ideal, lam.scaled(c)).report.F1 for c in (1, 2, 3)}
    ok = all(v == base for v in shifted.values()) and all(
        v == c * base for c, v in scaled.items())
    record(6, ok, f"{name}: F1={base}, shifts {sorted(set(shifted.values()))}, "
                  f"scales {[scaled[c] for c in (1, 2, 3)]}")
    assert ok


@pytest.mark.parametrize("entry", CORPUS, ids=CORPUS_IDS)
def test_criterion_7_flatness(entry):
    name, nv, gens, lam = entry
    ideal = make_ideal(gens, nv)
    lead = flat_limit(ideal, lam).lead
    bad = [m for m in range(13)
           if hilbert_function(lead, m) != hilbert_function_linear_algebra(ideal, m)]
    ok = not bad
    record(7, ok, f"{name}: lead ideal {lead}, mismatched m {bad}")
    assert ok


@pytest.mark.parametrize("gens, nv, expected, label", [
    (CONIC, 3, (1, 2), "conic 2m+1"),
    (TWISTED_CUBIC, 4, (1, 3), "twisted cubic 3m+1"),
    (QUADRIC, 4, (1, 2, 1), "quadric surface (m+1)^2"),
    (QUARTIC, 5, (1, 4), "rational normal quartic 4m+1"),
])
def test_criterion_8_hilbert_polynomials(gens, nv, expected, label):
    ideal = make_ideal(gens, nv)
    got = []
    for lam in [(0,) * nv, tuple(range(nv))]:
        got.append(hilbert_polynomial(flat_limit(ideal, lam).lead).poly_coeffs)
    ok = all(g == expected for g in got)
    record(8, ok, f"{label}: {got[0]}")
    assert ok
