"""Brute-force oracles, deliberately independent of the fast paths.

* :func:`all_monomials` / :func:`brute_standard_monomials` enumerate every
  degree-m monomial and filter by divisibility; no pruning, no kernels.
* :func:`hilbert_function_linear_algebra` computes ``dim (S/I)_m`` as
  ``C(m+N, N) - rank`` of the degree-m Macaulay matrix of the original
  generators, by exact sparse elimination.  No Groebner basis is involved.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from hilbstab.algebra import Ideal, Monomial, grevlex_key, mono_divides, mono_mul
from hilbstab.groebner import MonomialIdeal, OneParameterSubgroup

MAX_ORACLE_MONOMIALS = 10**6


class OracleGuardError(ValueError):
    pass


def monomial_count(num_vars: int, m: int) -> int:
    return comb(m + num_vars - 1, num_vars - 1) if m >= 0 else 0


def all_monomials(num_vars: int, m: int) -> list[Monomial]:
    """Every degree-m monomial, grevlex-descending."""
    out = []
    for combo in combinations_with_replacement(range(num_vars), m):
        exps = [0] * num_vars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out, key=grevlex_key, reverse=True)


def brute_standard_monomials(M: MonomialIdeal, m: int) -> list[Monomial]:
    if monomial_count(M.num_vars, m) > MAX_ORACLE_MONOMIALS:
        raise OracleGuardError(
            f"C({m}+{M.num_vars - 1}, {M.num_vars - 1}) exceeds {MAX_ORACLE_MONOMIALS}")
    if m < 0:
        return []
    return [a for a in all_monomials(M.num_vars, m)
            if not any(mono_divides(g, a) for g in M.minimal_generators)]


def oracle_dump(M: MonomialIdeal, lam: OneParameterSubgroup, m: int) -> dict:
    """Per-monomial weights and totals at degree m."""
    rows = [(a, lam.weight(a)) for a in brute_standard_monomials(M, m)]
    total = sum(w for _, w in rows)
    return {"rows": rows, "count": len(rows), "weight_total": total, "hilbert_weight": -total}


def hilbert_function_linear_algebra(ideal: Ideal, m: int) -> int:
    """dim_Q (S/I)_m from the rank of the degree-m Macaulay matrix."""
    n = ideal.num_vars
    total = monomial_count(n, m)
    if total > MAX_ORACLE_MONOMIALS:
        raise OracleGuardError(f"degree-{m} piece too large for the oracle")
    # pivot rows keyed by their leading (largest) column
    pivots: dict[Monomial, dict[Monomial, Fraction]] = {}
    for g in ideal.generators:
        dg = sum(next(iter(g.monomials())))
        if dg > m:
            continue
        for shift in all_monomials(n, m - dg):
            row = {mono_mul(a, shift): c for a, c in g.items()}
            _insert_row(row, pivots)
    return total - len(pivots)


def _insert_row(row: dict, pivots: dict) -> None:
    while row:
        lead = max(row, key=grevlex_key)
        piv = pivots.get(lead)
        if piv is None:
            c = row[lead]
            pivots[lead] = {k: v / c for k, v in row.items()}
            return
        c = row[lead]
        for k, v in piv.items():
            x = row.get(k, 0) - c * v
            if x:
                row[k] = x
            else:
                row.pop(k, None)
