"""Exact finite differences and polynomial fitting on integer sample points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


class StabilizationError(RuntimeError):
    """The sampled values never settle onto a polynomial of the expected degree."""


def finite_differences(values: Sequence, order: int) -> list:
    seq = list(values)
    for _ in range(order):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq


def interpolate(xs: Sequence[int], ys: Sequence) -> list[Fraction]:
    """Coefficients ``[c0, c1, ...]`` of the unique polynomial through the points.

    Newton divided differences, then expansion into the monomial basis.
    Trailing zero coefficients are stripped, so the zero polynomial is ``[]``.
    """
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must be distinct")
    n = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]] if n else []
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        newton.append(table[0])
    coeffs: list[Fraction] = [Fraction(0)] * n
    basis = [Fraction(1)]  # prod_{j<k} (x - xs[j])
    for k, a in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += a * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[k] * b
        basis = nxt
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_eval(coeffs: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def coefficient(coeffs: Sequence, k: int) -> Fraction:
    return Fraction(coeffs[k]) if 0 <= k < len(coeffs) else Fraction(0)


@dataclass(frozen=True)
class PolynomialFit:
    coeffs: tuple[Fraction, ...]
    degree_bound: int
    onset: int

    def __call__(self, m) -> Fraction:
        return poly_eval(self.coeffs, m)


def fit_tail(values: Mapping[int, int], degree: int | None = None, max_degree: int | None = None,
             confirmations: int | None = None) -> PolynomialFit:
    """Fit the eventual polynomial of an integer sequence sampled at consecutive m.

    With ``degree`` fixed, the order-(degree+1) differences must vanish on
    the last ``degree + 3`` samples.  Otherwise the smallest degree in
    ``-1 .. max_degree`` whose differences vanish is taken; the vanishing
    window is then at least ``max_degree + 1`` long so that a nonzero
    difference polynomial cannot masquerade as zero.  ``onset`` is the
    least sampled m from which every sample agrees with the fit.
    """
    ms = sorted(values)
    if not ms:
        raise StabilizationError("no samples")
    if ms != list(range(ms[0], ms[-1] + 1)):
        raise ValueError("samples must be at consecutive m")
    seq = [values[m] for m in ms]
    if degree is not None:
        candidates = [degree]
    else:
        if max_degree is None:
            raise ValueError("need degree or max_degree")
        candidates = list(range(-1, max_degree + 1))
    for k in candidates:
        window = confirmations if confirmations is not None else k + 3
        if degree is None:
            window = max(window, max_degree + 1)
        order = k + 1
        diffs = finite_differences(seq, order)
        if len(diffs) < window:
            continue
        if any(diffs[-window:]):
            continue
        tail = ms[-(k + 1):] if k >= 0 else []
        coeffs = interpolate(tail, [values[m] for m in tail]) if tail else []
        onset = ms[-1]
        for m in reversed(ms):
            if poly_eval(coeffs, m) != values[m]:
                break
            onset = m
        return PolynomialFit(tuple(coeffs), k, onset)
    raise StabilizationError(
        f"no stabilization detected on m = {ms[0]}..{ms[-1]}"
        + (f" at degree {degree}" if degree is not None else ""))
