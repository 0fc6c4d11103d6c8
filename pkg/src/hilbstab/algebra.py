"""Exact multivariate polynomials over the rationals.

Variables are positional, ``x0 ... xN``.  A monomial is a tuple of
non-negative exponents; a polynomial is an immutable map from monomials
to nonzero :class:`fractions.Fraction` coefficients, kept in graded
reverse-lexicographic descending order so that printing and hashing are
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple[int, ...]
Coefficient = Union[int, Fraction]

INHOMOGENEOUS = "inhomogeneous"
ZERO = "zero"


def grevlex_key(a: Monomial) -> tuple:
    """Sort key realizing graded reverse-lex; larger key means larger monomial.

    Within a degree, ``a > b`` iff the last nonzero entry of ``a - b`` is
    negative.
    """
    return (sum(a), tuple(-e for e in reversed(a)))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def format_monomial(a: Monomial) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable polynomial in ``num_vars`` variables with rational coefficients."""

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | Iterable = (), num_vars: int = 1):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != num_vars:
                raise ValueError(f"monomial {mono} does not have {num_vars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        ordered = sorted((m for m, c in acc.items() if c != 0), key=grevlex_key, reverse=True)
        self.num_vars = num_vars
        self._terms = {m: acc[m] for m in ordered}
        self._hash = None

    # construction helpers

    @classmethod
    def _trusted(cls, terms: dict[Monomial, Fraction], num_vars: int) -> Polynomial:
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj.num_vars = num_vars
        obj._terms = {m: terms[m] for m in sorted(terms, key=grevlex_key, reverse=True)}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, num_vars: int) -> Polynomial:
        return cls({}, num_vars)

    @classmethod
    def constant(cls, value: Coefficient, num_vars: int) -> Polynomial:
        return cls({(0,) * num_vars: value}, num_vars)

    @classmethod
    def variable(cls, index: int, num_vars: int) -> Polynomial:
        if not 0 <= index < num_vars:
            raise ValueError(f"variable x{index} out of range for {num_vars} variables")
        exps = [0] * num_vars
        exps[index] = 1
        return cls({tuple(exps): 1}, num_vars)

    @classmethod
    def monomial(cls, exps: Monomial, coeff: Coefficient = 1) -> Polynomial:
        return cls({tuple(exps): coeff}, len(exps))

    # accessors

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """Copy of the term map, in canonical order."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise ValueError(
                    f"mismatched num_vars: {self.num_vars} vs {other.num_vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.num_vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Polynomial._trusted(acc, self.num_vars)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._trusted({m: -c for m, c in self._terms.items()}, self.num_vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial._trusted({m: c for m, c in acc.items() if c}, self.num_vars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Coefficient) -> Polynomial:
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.num_vars)
        return Polynomial._trusted({m: v * c for m, v in self._terms.items()}, self.num_vars)

    # comparison / hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.num_vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, num_vars={self.num_vars})"

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form, e.g. ``-x1^2 + x0*x2``; parses back to ``p``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (mono, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = format_monomial(mono)
        if body == "1":
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if i == 0:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def homogeneous_degree(p: Polynomial) -> int | str:
    """Common degree of all terms, or ``"inhomogeneous"`` / ``"zero"``."""
    if p.is_zero():
        return ZERO
    degrees = {sum(m) for m in p.monomials()}
    if len(degrees) > 1:
        return INHOMOGENEOUS
    return degrees.pop()


def poly_arithmetic(op: str, p: Polynomial, q: Polynomial) -> Polynomial:
    if p.num_vars != q.num_vars:
        raise ValueError(f"mismatched num_vars: {p.num_vars} vs {q.num_vars}")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


class HomogeneityError(ValueError):
    """A generator of an ideal is not homogeneous (or is zero)."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class Ideal:
    """Homogeneous ideal given by nonzero homogeneous generators."""

    __slots__ = ("generators", "num_vars")

    def __init__(self, generators: Iterable[Polynomial], num_vars: int | None = None):
        gens = tuple(generators)
        if num_vars is None:
            if not gens:
                raise ValueError("num_vars is required for an ideal with no generators")
            num_vars = gens[0].num_vars
        for i, g in enumerate(gens):
            if g.num_vars != num_vars:
                raise ValueError(
                    f"generator {i} has {g.num_vars} variables, expected {num_vars}")
            deg = homogeneous_degree(g)
            if deg == ZERO:
                raise HomogeneityError(f"generator {i} is zero", i)
            if deg == INHOMOGENEOUS:
                raise HomogeneityError(f"generator {i} is not homogeneous: {g}", i)
        self.generators = gens
        self.num_vars = num_vars

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        inner = ", ".join(str(g) for g in self.generators)
        return f"Ideal<{inner}>"
