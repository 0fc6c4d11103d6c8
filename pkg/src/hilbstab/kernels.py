"""Backend selection for the standard-monomial kernels.

The compiled extension ``_ckernels`` is used when it imports; otherwise
the pure-Python walker.  Set ``HILBSTAB_PURE_PYTHON=1`` to force the
fallback.  Weight sums in the compiled path are 64-bit, so calls whose
worst-case magnitude could overflow are routed to Python integers.
"""

from __future__ import annotations

import os
from math import comb
from types import ModuleType

from hilbstab import _pykernels

_compiled: ModuleType | None
try:
    if os.environ.get("HILBSTAB_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced")
    from hilbstab import _ckernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_INT_LIMIT = 2**31 - 1
_ACC_LIMIT = 2**62


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def _module(backend: str | None) -> ModuleType:
    if backend is None:
        backend = BACKEND
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")


def _fits(gens, nvars: int, m: int, weights=None) -> bool:
    if m > _INT_LIMIT or any(e > _INT_LIMIT for g in gens for e in g):
        return False
    if weights is None:
        return comb(m + nvars - 1, nvars - 1) < _ACC_LIMIT
    wmax = max((abs(w) for w in weights), default=0)
    return wmax * m * comb(m + nvars - 1, nvars - 1) < _ACC_LIMIT and wmax < _ACC_LIMIT


def standard_monomials(gens, nvars: int, m: int, backend: str | None = None):
    mod = _module(backend)
    if mod is not _pykernels and not _fits(gens, nvars, m):
        mod = _pykernels
    return mod.standard_monomials(gens, nvars, m)


def count_standard(gens, nvars: int, m: int, backend: str | None = None) -> int:
    mod = _module(backend)
    if mod is not _pykernels and not _fits(gens, nvars, m):
        mod = _pykernels
    return mod.count_standard(gens, nvars, m)


def weigh_standard(gens, weights, nvars: int, m: int, backend: str | None = None):
    mod = _module(backend)
    if mod is not _pykernels and not _fits(gens, nvars, m, weights):
        mod = _pykernels
    return mod.weigh_standard(gens, tuple(weights), nvars, m)
