"""Pure-Python standard-monomial walkers (fallback for the compiled core).

All three entry points share the same depth-first walk: exponents are
fixed variable by variable, and a branch is cut as soon as the prefix
(with the remaining exponents zero) is divisible by a generator, since
raising later exponents cannot undo divisibility.  At depth ``i`` only
generators whose last nonzero exponent sits at index ``i`` need checking.
"""

from __future__ import annotations

from typing import Sequence


def _bucket(gens: Sequence[Sequence[int]], nvars: int) -> list[list[tuple[int, ...]]] | None:
    """Group generators by the index of their last nonzero exponent.

    Returns None when the unit monomial is a generator (nothing is standard).
    """
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(nvars)]
    for g in gens:
        g = tuple(g)
        last = -1
        for k in range(nvars):
            if g[k]:
                last = k
        if last < 0:
            return None
        buckets[last].append(g)
    return buckets


def _walk(gens, nvars: int, m: int, visit) -> None:
    if m < 0:
        return
    buckets = _bucket(gens, nvars)
    if buckets is None:
        return
    exps = [0] * nvars
    last = nvars - 1

    def divisible(i: int) -> bool:
        for g in buckets[i]:
            for k in range(i + 1):
                if exps[k] < g[k]:
                    break
            else:
                return True
        return False

    def rec(i: int, remaining: int) -> None:
        if i == last:
            exps[i] = remaining
            if not divisible(i):
                visit(exps)
            exps[i] = 0
            return
        for e in range(remaining + 1):
            exps[i] = e
            if divisible(i):
                break
            rec(i + 1, remaining - e)
        exps[i] = 0

    rec(0, m)


def standard_monomials(gens, nvars: int, m: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    _walk(gens, nvars, m, lambda exps: out.append(tuple(exps)))
    return out


def count_standard(gens, nvars: int, m: int) -> int:
    total = 0

    def visit(exps):
        nonlocal total
        total += 1

    _walk(gens, nvars, m, visit)
    return total


def weigh_standard(gens, weights: Sequence[int], nvars: int, m: int) -> tuple[int, int]:
    """Return (count, sum of <w, alpha>) over standard monomials of degree m."""
    count = 0
    wsum = 0
    w = tuple(weights)

    def visit(exps):
        nonlocal count, wsum
        count += 1
        wsum += sum(a * b for a, b in zip(w, exps))

    _walk(gens, nvars, m, visit)
    return count, wsum
