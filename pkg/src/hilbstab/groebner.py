"""Term orders, reduction, Buchberger's algorithm and weight degenerations.

A one-parameter subgroup acts by ``lambda(t) . x_i = t**w_i * x_i``.  The
flat limit ``lim_{t -> 0} lambda(t) X`` is realized as the ideal of
``w``-initial forms, where the initial form of ``f`` keeps exactly the
terms of maximal weight ``<w, alpha>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from hilbstab.algebra import (
    HomogeneityError,
    Ideal,
    Monomial,
    Polynomial,
    format_monomial,
    grevlex_key,
    mono_div,
    mono_divides,
    mono_lcm,
)

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class OneParameterSubgroup:
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @property
    def num_vars(self) -> int:
        return len(self.weights)

    def weight(self, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def is_trivial(self) -> bool:
        return not any(self.weights)

    def shifted(self, c: int) -> OneParameterSubgroup:
        return OneParameterSubgroup(tuple(w + c for w in self.weights))

    def scaled(self, c: int) -> OneParameterSubgroup:
        return OneParameterSubgroup(tuple(w * c for w in self.weights))


@dataclass(frozen=True)
class TermOrder:
    """Plain grevlex, or grevlex refined first by the weight ``<w, alpha>``.

    The weight-refined order compares total degree first, then weight,
    then grevlex; on monomials of equal degree that is "larger weight
    wins, ties broken by grevlex".
    """

    kind: str = "grevlex"
    weight: OneParameterSubgroup | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "weight"):
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.kind == "weight" and self.weight is None:
            raise ValueError("weight-refined order needs a weight vector")

    @classmethod
    def grevlex(cls) -> TermOrder:
        return cls("grevlex")

    @classmethod
    def weighted(cls, lam: OneParameterSubgroup | Sequence[int]) -> TermOrder:
        if not isinstance(lam, OneParameterSubgroup):
            lam = OneParameterSubgroup(tuple(lam))
        return cls("weight", lam)

    def key(self) -> Callable[[Monomial], tuple]:
        if self.kind == "grevlex":
            return grevlex_key
        w = self.weight.weights

        def weighted_key(a: Monomial) -> tuple:
            deg, rev = grevlex_key(a)
            return (deg, sum(x * y for x, y in zip(w, a)), rev)

        return weighted_key


def mono_compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise ValueError(f"monomial length mismatch: {len(a)} vs {len(b)}")
    if order.kind == "weight" and len(order.weight.weights) != len(a):
        raise ValueError("weight vector length does not match monomials")
    key = order.key()
    ka, kb = key(tuple(a)), key(tuple(b))
    if ka == kb:
        return EQUAL
    return GREATER if ka > kb else LESS


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (an antichain)."""

    minimal_generators: tuple[Monomial, ...]
    num_vars: int

    @classmethod
    def from_generators(cls, gens: Iterable[Monomial], num_vars: int) -> MonomialIdeal:
        return cls(minimalize(gens), num_vars)

    @classmethod
    def unit(cls, num_vars: int) -> MonomialIdeal:
        return cls(((0,) * num_vars,), num_vars)

    def contains(self, mono: Monomial) -> bool:
        return any(mono_divides(g, mono) for g in self.minimal_generators)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.minimal_generators), default=0)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.minimal_generators) + ")"


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators of the monomial ideal, grevlex-descending."""
    unique = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), grevlex_key(g)))
    kept: list[Monomial] = []
    for g in unique:
        if not any(mono_divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, key=grevlex_key, reverse=True))


# Internal polynomials for the Groebner engine are plain dicts {monomial: Fraction}.

def _lead(f: dict, key) -> Monomial:
    return max(f, key=key)


def _sub_scaled(f: dict, g: dict, coeff: Fraction, shift: Monomial) -> None:
    """In place: f -= coeff * x^shift * g."""
    for m, c in g.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        v = f.get(mm, 0) - coeff * c
        if v:
            f[mm] = v
        else:
            f.pop(mm, None)


def _reduce(f: dict, basis: list[tuple[Monomial, dict]], key, full: bool = True) -> dict:
    """Normal form of f against basis entries (lead, monic poly)."""
    f = dict(f)
    remainder: dict = {}
    while f:
        lm = _lead(f, key)
        for lead, g in basis:
            if mono_divides(lead, lm):
                _sub_scaled(f, g, f[lm], mono_div(lm, lead))
                break
        else:
            if not full:
                remainder.update(f)
                return remainder
            remainder[lm] = f.pop(lm)
    return remainder


def _monic(f: dict, key) -> dict:
    c = f[_lead(f, key)]
    return {m: v / c for m, v in f.items()}


def _to_dict(p: Polynomial) -> dict:
    return dict(p.items())


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``basis``."""
    key = order.key()
    entries = []
    for g in basis:
        if g.is_zero():
            raise ValueError("basis elements must be nonzero")
        gd = _monic(_to_dict(g), key)
        entries.append((_lead(gd, key), gd))
    return Polynomial._trusted(_reduce(_to_dict(f), entries, key), f.num_vars)


@dataclass
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: TermOrder
    reduced: bool = True
    num_vars: int = 0
    stats: dict = field(default_factory=dict, compare=False)

    def leads(self) -> tuple[Monomial, ...]:
        key = self.order.key()
        return tuple(max(g.monomials(), key=key) for g in self.generators)

    def lead_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_generators(self.leads(), self.num_vars)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def _check_homogeneous(ideal: Ideal) -> None:
    # Ideal already validates; re-check for duck-typed inputs.
    for i, g in enumerate(ideal.generators):
        degrees = {sum(m) for m in g.monomials()}
        if len(degrees) != 1:
            raise HomogeneityError(f"generator {i} is not homogeneous: {g}", i)


def s_polynomial(f: dict, g: dict, key) -> dict:
    lf, lg = _lead(f, key), _lead(g, key)
    lcm = mono_lcm(lf, lg)
    out: dict = {}
    _sub_scaled(out, f, Fraction(-1) / f[lf], mono_div(lcm, lf))
    _sub_scaled(out, g, Fraction(1) / g[lg], mono_div(lcm, lg))
    return out


def buchberger(ideal: Ideal, order: TermOrder) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    Pairs are processed by increasing lcm degree; the coprime-leads
    criterion and the chain criterion discard pairs known to reduce to 0.
    """
    _check_homogeneous(ideal)
    n = ideal.num_vars
    key = order.key()
    basis: list[dict] = []
    leads: list[Monomial] = []
    pairs: set[tuple[int, int]] = set()
    stats = {"pairs": 0, "coprime_skipped": 0, "chain_skipped": 0, "zero_reductions": 0}

    def add(h: dict) -> None:
        h = _monic(h, key)
        j = len(basis)
        basis.append(h)
        leads.append(_lead(h, key))
        for i in range(j):
            pairs.add((i, j))

    gens = [_to_dict(g) for g in ideal.generators]
    gens.sort(key=lambda f: key(_lead(f, key)))
    for g in gens:
        r = _reduce(g, list(zip(leads, basis)), key)
        if r:
            add(r)

    while pairs:
        i, j = min(pairs, key=lambda p: (sum(mono_lcm(leads[p[0]], leads[p[1]])),
                                          key(mono_lcm(leads[p[0]], leads[p[1]])), p))
        pairs.discard((i, j))
        stats["pairs"] += 1
        lcm = mono_lcm(leads[i], leads[j])
        if all(a == 0 or b == 0 for a, b in zip(leads[i], leads[j])):
            stats["coprime_skipped"] += 1
            continue
        if _chain_criterion(i, j, lcm, leads, pairs):
            stats["chain_skipped"] += 1
            continue
        s = s_polynomial(basis[i], basis[j], key)
        r = _reduce(s, list(zip(leads, basis)), key)
        if r:
            add(r)
        else:
            stats["zero_reductions"] += 1

    reduced = _interreduce(basis, key)
    polys = tuple(Polynomial._trusted(f, n) for f in reduced)
    return GroebnerBasis(polys, order, True, n, stats)


def _chain_criterion(i, j, lcm, leads, pairs) -> bool:
    for k in range(len(leads)):
        if k in (i, j):
            continue
        if not mono_divides(leads[k], lcm):
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        return True
    return False


def _interreduce(basis: list[dict], key) -> list[dict]:
    leads = [_lead(f, key) for f in basis]
    keep = []
    for i, f in enumerate(basis):
        lf = leads[i]
        redundant = False
        for j, lg in enumerate(leads):
            if j == i:
                continue
            if mono_divides(lg, lf) and (lg != lf or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(f)
    out = []
    for i, f in enumerate(keep):
        others = [(_lead(g, key), g) for k, g in enumerate(keep) if k != i]
        r = _reduce(f, others, key)
        out.append(_monic(r, key))
    out.sort(key=lambda f: key(_lead(f, key)), reverse=True)
    return out


def initial_form(f: Polynomial, lam: OneParameterSubgroup) -> Polynomial:
    """Terms of ``f`` of maximal weight ``<w, alpha>``."""
    if f.is_zero():
        return f
    top = max(lam.weight(m) for m in f.monomials())
    return Polynomial._trusted({m: c for m, c in f.items() if lam.weight(m) == top},
                               f.num_vars)


@dataclass(frozen=True)
class FlatLimit:
    initial_forms: Ideal
    lead: MonomialIdeal
    basis: GroebnerBasis


def flat_limit(ideal: Ideal, lam: OneParameterSubgroup | Sequence[int]) -> FlatLimit:
    """Degenerate ``ideal`` along ``lam`` to its weight-initial ideal.

    Returns the initial forms of the reduced Groebner basis under the
    weight-refined order (a reduced basis of the initial ideal) and their
    lead monomial ideal, which has the same Hilbert function as ``ideal``.
    """
    if not isinstance(lam, OneParameterSubgroup):
        lam = OneParameterSubgroup(tuple(lam))
    if lam.num_vars != ideal.num_vars:
        raise ValueError(
            f"weight vector has {lam.num_vars} entries, ideal has {ideal.num_vars} variables")
    order = TermOrder.weighted(lam)
    gb = buchberger(ideal, order)
    forms = [initial_form(g, lam) for g in gb.generators]
    lead = gb.lead_ideal()
    return FlatLimit(Ideal(forms, ideal.num_vars), lead, gb)


def s_pairs_reduce_to_zero(gb: GroebnerBasis) -> bool:
    """Buchberger's criterion, checked on every pair without shortcuts."""
    key = gb.order.key()
    polys = [_to_dict(g) for g in gb.generators]
    entries = [(_lead(f, key), _monic(f, key)) for f in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if _reduce(s_polynomial(polys[i], polys[j], key), entries, key):
                return False
    return True
