"""Compare the compiled and pure-Python standard-monomial kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case weighs every standard monomial of the flat-limit lead ideal for
m = 0..m_max, the inner loop of a full weight profile.
"""

from __future__ import annotations

import argparse
import time

from hilbstab import kernels
from hilbstab.algebra import Ideal
from hilbstab.groebner import flat_limit
from hilbstab.parser import parse_polynomial

_ROWS = ((0, 1, 2, 3), (1, 2, 3, 4))
CASES = [
    ("conic (2,-1,-1)", 3, ["x0*x2 - x1^2"], (2, -1, -1), 200),
    ("twisted cubic (1,0,0,-1)", 4,
     ["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"], (1, 0, 0, -1), 150),
    ("quadric surface (1,0,0,0)", 4, ["x0*x3 - x1*x2"], (1, 0, 0, 0), 60),
    ("rational normal quartic (2,1,0,0,-3)", 5,
     [f"x{_ROWS[0][i]}*x{_ROWS[1][j]} - x{_ROWS[0][j]}*x{_ROWS[1][i]}"
      for i in range(4) for j in range(i + 1, 4)], (2, 1, 0, 0, -3), 60),
    ("plane cubic (1,0,-1)", 3, ["x0^3 + x1^3 + x2^3"], (1, 0, -1), 120),
]


def time_backend(gens, weights, nvars, m_max, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = [kernels.weigh_standard(gens, weights, nvars, m, backend)
                  for m in range(m_max + 1)]
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':<40} {'m_max':>5} " + " ".join(f"{b:>10}" for b in backends) + "  speedup")
    for label, nv, gens, lam, m_max in CASES:
        ideal = Ideal([parse_polynomial(g, nv) for g in gens], nv)
        lead = flat_limit(ideal, lam).lead.minimal_generators
        timings, results = [], []
        for b in backends:
            t, r = time_backend(lead, lam, nv, m_max, b, args.repeat)
            timings.append(t)
            results.append(r)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backends disagree on {label}")
        speed = f"{timings[-1] / timings[0]:7.1f}x" if len(timings) == 2 else "    n/a"
        print(f"{label:<40} {m_max:>5} " + " ".join(f"{t:>9.4f}s" for t in timings)
              + f"  {speed}")


if __name__ == "__main__":
    main()
