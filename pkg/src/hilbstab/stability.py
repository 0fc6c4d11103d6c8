"""Hilbert-point weights, the invariant F1, the CM weight and the lift weights.

Sign convention: the m-th Hilbert point lives in the dual exterior power,
so its weight is minus the total ``<w, alpha>`` over a basis of standard
monomials.  The choice is one global constant, :data:`WEIGHT_SIGN`, pinned
by the calibration tests (non-stabilizing degenerations of a conic have
F1 < 0, the stabilizer direction has F1 = 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from hilbstab import kernels
from hilbstab.groebner import MonomialIdeal, OneParameterSubgroup
from hilbstab.hilbert import HilbertProfile, default_m_max
from hilbstab.interp import StabilizationError, coefficient, fit_tail, interpolate

WEIGHT_SIGN = -1


class RangeBelowOnset(ValueError):
    """Requested m range starts before the weight polynomial has stabilized."""


class MissingValues(KeyError):
    pass


def _as_lambda(lam) -> OneParameterSubgroup:
    return lam if isinstance(lam, OneParameterSubgroup) else OneParameterSubgroup(tuple(lam))


def hilbert_weight(M: MonomialIdeal, lam, m: int, backend: str | None = None) -> int:
    """Weight of the m-th Hilbert point of the fixed point with lead ideal ``M``."""
    lam = _as_lambda(lam)
    _, total = kernels.weigh_standard(M.minimal_generators, lam.weights, M.num_vars, m, backend)
    return WEIGHT_SIGN * total


def weight_table(M: MonomialIdeal, lam, ms: Iterable[int],
                 backend: str | None = None) -> tuple[dict[int, int], dict[int, int]]:
    """Hilbert-point weights and standard-monomial counts over ``ms``."""
    lam = _as_lambda(lam)
    weights, counts = {}, {}
    for m in ms:
        count, total = kernels.weigh_standard(
            M.minimal_generators, lam.weights, M.num_vars, m, backend)
        weights[m] = WEIGHT_SIGN * total
        counts[m] = count
    return weights, counts


@dataclass
class WeightProfile:
    """Weights w(Hilb_m) and their eventual polynomial ``sum a_k m^k``.

    ``a_coeffs`` runs ``a_0 .. a_{n+1}``, padded with zeros to length n+2.
    """

    values: dict[int, int]
    a_coeffs: tuple[Fraction, ...]
    onset_m0: int
    counts: dict[int, int] = field(default_factory=dict)

    def a(self, k: int) -> Fraction:
        return coefficient(self.a_coeffs, k)


def weight_profile(M: MonomialIdeal, lam, n: int, m_max: int | None = None,
                   backend: str | None = None) -> WeightProfile:
    """Sample weights on 0..m_max, fit the degree-(n+1) tail, spot-check at m_max + 2."""
    if m_max is None:
        m_max = default_m_max(M)
    top = max(n + 1, 0)
    values, counts = weight_table(M, lam, range(m_max + 1), backend)
    fit = fit_tail(values, degree=top)
    spot = m_max + 2
    spot_value = hilbert_weight(M, lam, spot, backend)
    if fit(spot) != spot_value:
        raise StabilizationError(
            f"no stabilization detected: w({spot}) = {spot_value} but fit gives {fit(spot)}")
    if fit.onset > m_max - (n + 4) + 1:
        raise StabilizationError(
            f"weight polynomial settles at m = {fit.onset}, too close to m_max = {m_max}")
    coeffs = list(fit.coeffs) + [Fraction(0)] * (top + 1 - len(fit.coeffs))
    return WeightProfile(values, tuple(coeffs), fit.onset, counts)


def futaki_F1(wp: WeightProfile, hp: HilbertProfile) -> Fraction:
    """F1 = n!/(2d) * (2 a_n - mu a_{n+1})."""
    n, d, mu = hp.dim_n, hp.degree_d, hp.mu
    if len(wp.a_coeffs) > n + 2 and any(wp.a_coeffs[n + 2:]):
        raise ValueError("weight profile degree exceeds n + 1")
    return Fraction(factorial(n), 2 * d) * (2 * wp.a(n) - mu * wp.a(n + 1))


def cm_weight(F1: Fraction, d: int, n: int) -> Fraction:
    return 2 * d * (n + 1) * Fraction(F1)


def chow_weight_leading(wp: WeightProfile, n: int) -> Fraction:
    """Leading-coefficient Chow weight proxy (n+1)! a_{n+1}."""
    return factorial(n + 1) * wp.a(n + 1)


def _alternating(values: Mapping[int, int], order: int, m: int) -> int:
    total = 0
    for i in range(order + 1):
        if m + i not in values:
            raise MissingValues(f"weight at m = {m + i} is not available")
        total += (-1) ** i * comb(order, i) * values[m + i]
    return total


def lift_weight_L1(values: Mapping[int, int], n: int, m: int) -> int:
    return _alternating(values, n, m)


def lift_weight_L2(values: Mapping[int, int], n: int, m: int) -> int:
    return _alternating(values, n + 1, m)


def lift_weight_total(values: Mapping[int, int], n: int, mu, m: int) -> Fraction:
    """Weight of the parameter-dependent lift at m.

    (-1)^n [2(n+1)(L1(m) + m L2(m)) + (mu + n(n+1)) L2(m)]
    """
    L1 = lift_weight_L1(values, n, m)
    L2 = lift_weight_L2(values, n, m)
    return (-1) ** n * (2 * (n + 1) * (L1 + m * L2) + (Fraction(mu) + n * (n + 1)) * L2)


@dataclass
class IndependenceResult:
    table: dict[int, Fraction]
    target: Fraction
    cm: Fraction | None
    passed: bool
    mismatches: list[int]

    @property
    def constant(self) -> Fraction | None:
        vals = set(self.table.values())
        return vals.pop() if len(vals) == 1 else None


def verify_m_independence(values: Mapping[int, int], n: int, mu, a_top, a_sub,
                          m_range: Iterable[int], d: int | None = None,
                          onset: int | None = None) -> IndependenceResult:
    """Check the lift weight is the same for every m and equals (n+1)!(2 a_n - mu a_{n+1}).

    When ``d`` is given the common value must also equal the CM weight
    2 d (n+1) F1.  Offending m are listed in ``mismatches``.
    """
    ms = list(m_range)
    if not ms:
        raise ValueError("empty m range")
    if onset is not None and min(ms) < onset:
        raise RangeBelowOnset(f"range starts at m = {min(ms)}, before onset m0 = {onset}")
    mu = Fraction(mu)
    target = factorial(n + 1) * (2 * Fraction(a_sub) - mu * Fraction(a_top))
    cm = None
    if d is not None:
        F1 = Fraction(factorial(n), 2 * d) * (2 * Fraction(a_sub) - mu * Fraction(a_top))
        cm = cm_weight(F1, d, n)
    table = {m: lift_weight_total(values, n, mu, m) for m in ms}
    mismatches = [m for m, v in table.items() if v != target or (cm is not None and v != cm)]
    return IndependenceResult(table, target, cm, not mismatches, mismatches)


def binomial_sum(n: int, k: int, m: int) -> int:
    """sum_{i=0}^{n} (-1)^i C(n, i) (m + i)^k, evaluated directly."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return sum((-1) ** i * comb(n, i) * (m + i) ** k for i in range(n + 1))


def closed_form(n: int, k: int, m: int) -> Fraction:
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n + 1:
        raise ValueError("closed form is only defined for k <= n + 1")
    sign = (-1) ** n
    if k == n + 1:
        return sign * (m + Fraction(n, 2)) * factorial(n + 1)
    if k == n:
        return Fraction(sign * factorial(n))
    return Fraction(0)


def _series_quotient(num: Sequence[Fraction], den: Sequence[Fraction], terms: int) -> list[Fraction]:
    # power series num / den in one variable, den[0] != 0
    out: list[Fraction] = []
    for j in range(terms):
        acc = Fraction(num[j]) if j < len(num) else Fraction(0)
        for i in range(1, j + 1):
            if i < len(den):
                acc -= den[i] * out[j - i]
        out.append(acc / den[0])
    return out


def f1_via_expansion(values: Mapping[int, int], hf_values: Mapping[int, int],
                     m_range: Iterable[int]) -> Fraction:
    """Coefficient of 1/m in w(Hilb_m) / (m P(m)), as m -> infinity.

    Both tables are interpolated exactly on ``m_range`` (which must lie in
    the stable region); the quotient is expanded as a power series in 1/m.
    """
    ms = list(m_range)
    hf = interpolate(ms, [hf_values[m] for m in ms])
    n = len(hf) - 1
    if n < 0:
        raise StabilizationError("Hilbert polynomial vanishes on the range")
    if len(ms) < n + 3:
        raise StabilizationError("range too short to confirm the weight polynomial")
    w = interpolate(ms, [values[m] for m in ms])
    if len(w) > n + 2:
        raise StabilizationError("weights are not a polynomial of degree <= n + 1 on the range")
    top = n + 1
    # m P(m) has coefficients b_k = c_{k-1}; reverse into powers of u = 1/m
    num = [coefficient(w, top - j) for j in range(top + 1)]
    den = [coefficient(hf, top - 1 - j) for j in range(top + 1)]
    return _series_quotient(num, den, 2)[1]


@dataclass
class StabilityReport:
    n: int
    d: int
    mu: Fraction
    a_top: Fraction
    a_sub: Fraction
    F1: Fraction
    w_cm: Fraction
    lift_table: dict[int, Fraction]
    chow_top: Fraction
    F1_expansion: Fraction | None = None
    lift_target: Fraction | None = None

    @property
    def eq_chow_coefficient(self) -> Fraction:
        """2d + mu/(n+1) - (n+2), the Chow-weight coefficient in the CM formula (metadata)."""
        return 2 * self.d + self.mu / (self.n + 1) - (self.n + 2)
