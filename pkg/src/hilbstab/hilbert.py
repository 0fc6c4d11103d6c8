"""Hilbert functions and polynomials of monomial ideals.

Two independent routes compute the Hilbert function: direct enumeration
of standard monomials (the compiled/pure walker in :mod:`hilbstab.kernels`)
and a pivot recursion on the Hilbert series numerator,
``N(M) = N(M + (p)) + t^deg(p) N(M : p)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable

from hilbstab import kernels
from hilbstab.algebra import Monomial, grevlex_key
from hilbstab.groebner import MonomialIdeal, minimalize
from hilbstab.interp import StabilizationError, coefficient, fit_tail, poly_eval


class NonGeometricProfile(ValueError):
    pass


def standard_monomials(M: MonomialIdeal, m: int, backend: str | None = None) -> list[Monomial]:
    """Degree-m monomials outside ``M``, grevlex-descending."""
    if m < 0:
        return []
    found = kernels.standard_monomials(M.minimal_generators, M.num_vars, m, backend)
    return sorted(found, key=grevlex_key, reverse=True)


# -- recursive Hilbert series ------------------------------------------------

def _coprime(gens) -> bool:
    seen = set()
    for g in gens:
        support = {i for i, e in enumerate(g) if e}
        if seen & support:
            return False
        seen |= support
    return True


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


@lru_cache(maxsize=4096)
def _numerator(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if _coprime(gens):
        out = [1]
        for g in gens:
            factor = [0] * (sum(g) + 1)
            factor[0] += 1
            factor[sum(g)] -= 1
            out = _poly_mul(out, factor)
        return tuple(out)
    nvars = len(gens[0])
    counts = [0] * nvars
    for g in gens:
        if sum(1 for e in g if e) > 1:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
    pivot_var = max(range(nvars), key=lambda i: (counts[i], -i))
    # pivot exponent from mixed generators only, so p never equals a generator
    exps = sorted(g[pivot_var] for g in gens if g[pivot_var] and sum(1 for x in g if x) > 1)
    e = exps[(len(exps) - 1) // 2]
    p = tuple(e if i == pivot_var else 0 for i in range(nvars))
    with_p = minimalize(list(gens) + [p])
    quotient = minimalize(tuple(max(a - b, 0) for a, b in zip(g, p)) for g in gens)
    shifted = [0] * e + list(_numerator(quotient))
    return tuple(_poly_add(list(_numerator(with_p)), shifted))


def hilbert_series_numerator(M: MonomialIdeal) -> list[int]:
    """Coefficients of N(t) with HS(S/M) = N(t) / (1 - t)^num_vars."""
    if not M.minimal_generators:
        return [1]
    out = list(_numerator(tuple(M.minimal_generators)))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_function(M: MonomialIdeal, m: int, method: str = "enumerate",
                     backend: str | None = None) -> int:
    """Number of degree-m standard monomials of ``M``.

    ``method="enumerate"`` walks the standard monomials; ``"recursive"``
    reads the value off the Hilbert series numerator.
    """
    if m < 0:
        return 0
    if method == "enumerate":
        return kernels.count_standard(M.minimal_generators, M.num_vars, m, backend)
    if method == "recursive":
        num = hilbert_series_numerator(M)
        r = M.num_vars - 1
        return sum(c * comb(m - j + r, r) for j, c in enumerate(num) if j <= m)
    raise ValueError(f"unknown method {method!r}")


# -- Hilbert polynomial ------------------------------------------------------

@dataclass
class HilbertProfile:
    """Hilbert function samples and the fitted Hilbert polynomial.

    ``poly_coeffs`` lists ``c0, c1, ..., cn`` (constant term first).  For
    an empty scheme (P = 0) ``dim_n`` is -1 and ``degree_d`` is 0.
    """

    values: dict[int, int]
    poly_coeffs: tuple[Fraction, ...]
    onset_m0: int
    dim_n: int
    degree_d: int
    mu: Fraction
    num_vars: int = 0
    checks: dict = field(default_factory=dict)

    def P(self, m) -> Fraction:
        return poly_eval(self.poly_coeffs, m)


def default_m_max(M: MonomialIdeal, dim_bound: int | None = None) -> int:
    """2 * (max generator degree) * n + 8, with n bounded by the ambient dimension."""
    n = M.num_vars - 1 if dim_bound is None else dim_bound
    return 2 * max(M.max_degree(), 1) * max(n, 0) + 8


def hilbert_values(M: MonomialIdeal, ms: Iterable[int], fast_path: bool = True) -> dict[int, int]:
    if fast_path:
        return {m: hilbert_function(M, m, "recursive") for m in ms}
    return {m: hilbert_function(M, m, "enumerate", backend="python") for m in ms}


def geometric_invariants(profile: HilbertProfile | tuple) -> tuple[int, int, Fraction]:
    """Dimension n, degree d = n! c_n and mu = 2 n! c_{n-1} / d."""
    coeffs = profile.poly_coeffs if isinstance(profile, HilbertProfile) else tuple(profile)
    if not coeffs:
        raise NonGeometricProfile("Hilbert polynomial is zero")
    n = len(coeffs) - 1
    d = factorial(n) * Fraction(coeffs[n])
    if d.denominator != 1 or d <= 0:
        raise NonGeometricProfile(f"degree {d} is not a positive integer")
    d = int(d)
    mu = Fraction(2 * factorial(n)) * coefficient(coeffs, n - 1) / d
    return n, d, mu


def hilbert_polynomial(M: MonomialIdeal, m_max: int | None = None,
                       fast_path: bool = True) -> HilbertProfile:
    """Sample HF on 0..m_max, fit the eventual polynomial, spot-check at m_max + 2."""
    if m_max is None:
        m_max = default_m_max(M)
    values = hilbert_values(M, range(m_max + 1), fast_path)
    fit = fit_tail(values, max_degree=M.num_vars - 1)
    spot = m_max + 2
    spot_value = hilbert_values(M, [spot], fast_path)[spot]
    if fit(spot) != spot_value:
        raise StabilizationError(
            f"no stabilization detected: HF({spot}) = {spot_value} but P({spot}) = {fit(spot)}")
    if fit.coeffs:
        n, d, mu = geometric_invariants(fit.coeffs)
    else:
        n, d, mu = -1, 0, Fraction(0)
    return HilbertProfile(values, fit.coeffs, fit.onset, n, d, mu, M.num_vars,
                          {"spot_check_m": spot, "spot_check_value": spot_value})
