from __future__ import annotations

from pathlib import Path

import pytest

from hilbstab.algebra import Ideal
from hilbstab.parser import parse_polynomial

ROOT = Path(__file__).resolve().parents[1]
CORPUS_DIR = ROOT / "corpus"

_RNC_ROWS = ((0, 1, 2, 3), (1, 2, 3, 4))
QUARTIC = [
    f"x{_RNC_ROWS[0][i]}*x{_RNC_ROWS[1][j]} - x{_RNC_ROWS[0][j]}*x{_RNC_ROWS[1][i]}"
    for i in range(4) for j in range(i + 1, 4)
]
TWISTED_CUBIC = ["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]
CONIC = ["x0*x2 - x1^2"]
QUADRIC = ["x0*x3 - x1*x2"]

# (name, num_vars, generators, lambda weights)
CORPUS = [
    ("conic-two-lines", 3, CONIC, (2, -1, -1)),
    ("conic-stabilizer", 3, CONIC, (1, 0, -1)),
    ("conic-double-line", 3, CONIC, (-2, 1, 1)),
    ("twisted-cubic", 4, TWISTED_CUBIC, (1, 0, 0, -1)),
    ("twisted-cubic-stabilizer", 4, TWISTED_CUBIC, (3, 1, -1, -3)),
    ("quadric-surface", 4, QUADRIC, (1, 0, 0, 0)),
    ("rational-normal-quartic", 5, QUARTIC, (2, 1, 0, 0, -3)),
]
CORPUS_IDS = [c[0] for c in CORPUS]


def make_ideal(gens, num_vars) -> Ideal:
    return Ideal([parse_polynomial(g, num_vars) for g in gens], num_vars)


@pytest.fixture(params=CORPUS, ids=CORPUS_IDS)
def corpus_entry(request):
    name, nv, gens, lam = request.param
    return name, make_ideal(gens, nv), lam


# criterion number -> list of (ok, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, []).append((ok, detail))
    print(f"[acceptance {criterion}] {'PASS' if ok else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        results = ACCEPTANCE[criterion]
        ok = all(r for r, _ in results)
        failed = [d for r, d in results if not r]
        line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} ({len(results)} checks)"
        if failed:
            line += " failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
