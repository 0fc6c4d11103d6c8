"""Command-line driver.

Exit codes: 0 success, 1 bad input (job file, parse, homogeneity,
stabilization window), 2 a mathematical invariant failed.  ``corpus``
additionally exits 3 when the only problem is jobs without a golden.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb
from pathlib import Path

from hilbstab import kernels
from hilbstab.algebra import format_monomial
from hilbstab.groebner import OneParameterSubgroup, flat_limit
from hilbstab.hilbert import NonGeometricProfile, hilbert_function
from hilbstab.interp import StabilizationError
from hilbstab.oracle import MAX_ORACLE_MONOMIALS, OracleGuardError, oracle_dump
from hilbstab.pipeline import ensure_weights
from hilbstab.report import (
    JobError,
    build_report,
    compare_golden,
    dump_report,
    golden_subset,
    job_name,
    load_job,
    run_job,
)
from hilbstab.stability import RangeBelowOnset, hilbert_weight, verify_m_independence

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_NEW = 0, 1, 2, 3

log = logging.getLogger("hilbstab")

# Test hook: called with the weight table right before `verify` checks it.
TAMPER_HOOK = None


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _fast_path(args) -> bool | None:
    return False if args.no_fast_path else None


def _cross(args) -> bool | None:
    return True if args.cross_check else None


def _run(job, args):
    try:
        return run_job(job, _fast_path(args), _cross(args))
    except (StabilizationError, NonGeometricProfile) as exc:
        raise CommandError(str(exc), EXIT_INPUT) from exc


def cmd_analyze(args) -> int:
    job = load_job(args.job)
    if args.m_max is not None:
        job.m_max = args.m_max
    start = time.perf_counter()
    analysis = _run(job, args)
    report = build_report(job, analysis, time.perf_counter() - start)
    sys.stdout.write(dump_report(report))
    if not analysis.ok:
        print(f"error: invariant violation: {', '.join(analysis.failures())}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_verify(args) -> int:
    job = load_job(args.job)
    analysis = _run(job, args)
    n, mu, d = analysis.report.n, analysis.report.mu, analysis.report.d
    onset = max(analysis.weights.onset_m0, analysis.hilbert.onset_m0)
    m_from, m_to = args.m_from, args.m_to
    if m_to < m_from:
        raise CommandError("--m-to must be >= --m-from", EXIT_INPUT)
    if m_from < onset:
        print(f"warning: m_from = {m_from} is below the onset m0 = {onset}; "
              f"range adjusted to {onset}..{max(m_to, onset)}", file=sys.stderr)
        m_to = max(m_to, onset)
        m_from = onset
    ensure_weights(analysis, m_to + n + 1)
    values = dict(analysis.weights.values)
    if TAMPER_HOOK is not None:
        TAMPER_HOOK(values)
    wp = analysis.weights
    try:
        result = verify_m_independence(values, n, mu, wp.a(n + 1), wp.a(n),
                                       range(m_from, m_to + 1), d=d, onset=onset)
    except RangeBelowOnset as exc:
        raise CommandError(str(exc), EXIT_INPUT) from exc
    print(f"# n={n} d={d} mu={mu} a_top={wp.a(n + 1)} a_sub={wp.a(n)}")
    for m, value in result.table.items():
        flag = "" if m not in result.mismatches else "  MISMATCH"
        print(f"{m}\t{value}{flag}")
    print(f"target\t{result.target}")
    print(f"cm_weight\t{result.cm}")
    if not result.passed:
        print(f"error: lift weight not constant at m = {result.mismatches}", file=sys.stderr)
        return EXIT_INVARIANT
    print("verdict\tpass")
    return EXIT_OK


def cmd_oracle(args) -> int:
    job = load_job(args.job)
    lam = OneParameterSubgroup(tuple(job.lambda_weights))
    m = args.m
    if m < 0:
        raise CommandError("--m must be non-negative", EXIT_INPUT)
    if comb(m + job.num_vars - 1, job.num_vars - 1) > MAX_ORACLE_MONOMIALS:
        raise CommandError(
            f"guard exceeded: more than {MAX_ORACLE_MONOMIALS} monomials of degree {m}",
            EXIT_INPUT)
    lead = flat_limit(job.ideal(), lam).lead
    try:
        dump = oracle_dump(lead, lam, m)
    except OracleGuardError as exc:
        raise CommandError(str(exc), EXIT_INPUT) from exc
    print(f"# lead ideal {lead}, m = {m}, weights {list(lam.weights)}")
    for mono, weight in dump["rows"]:
        print(f"{format_monomial(mono)}\t{weight}")
    print(f"count\t{dump['count']}")
    print(f"weight_total\t{dump['weight_total']}")
    print(f"hilbert_weight\t{dump['hilbert_weight']}")
    pipeline_hf = hilbert_function(lead, m, "recursive")
    pipeline_w = hilbert_weight(lead, lam, m)
    if pipeline_hf != dump["count"] or pipeline_w != dump["hilbert_weight"]:
        print(f"error: pipeline disagrees (HF {pipeline_hf}, weight {pipeline_w})",
              file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _corpus_one(path: str, fast_path, cross_check) -> tuple[str, str, str]:
    """Run one corpus job; returns (name, status, detail)."""
    path = Path(path)
    name = job_name(path)
    golden_path = path.with_name(f"{name}.expected.json")
    try:
        job = load_job(path)
        analysis = run_job(job, fast_path, cross_check)
    except (JobError, StabilizationError, NonGeometricProfile) as exc:
        return name, "error", str(exc)
    report = build_report(job, analysis)
    if not analysis.ok:
        return name, "invariant", ",".join(analysis.failures())
    if not golden_path.exists():
        return name, "new", json.dumps(golden_subset(report))
    golden = json.loads(golden_path.read_text(encoding="utf-8"))
    diffs = compare_golden(report, golden)
    if diffs:
        return name, "fail", ",".join(diffs)
    return name, "pass", f"F1={report['stability']['F1']}"


def cmd_corpus(args) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise CommandError(f"{directory} is not a directory", EXIT_INPUT)
    paths = sorted(str(p) for p in directory.glob("*.job.json"))
    fast, cross = _fast_path(args), _cross(args)
    if args.jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_corpus_one, paths, [fast] * len(paths), [cross] * len(paths)))
    else:
        results = [_corpus_one(p, fast, cross) for p in paths]
    statuses = []
    for name, status, detail in results:
        if status == "new" and args.write_missing:
            golden = directory / f"{name}.expected.json"
            golden.write_text(json.dumps(json.loads(detail), indent=2) + "\n", encoding="utf-8")
            status, detail = "written", str(golden)
        shown = detail if status not in ("new",) else "no golden"
        print(f"{name:<32} {status:<10} {shown}")
        statuses.append(status)
    summary = {s: statuses.count(s) for s in sorted(set(statuses))}
    print(f"{len(results)} jobs" + "".join(f", {k}: {v}" for k, v in summary.items()))
    if "invariant" in statuses:
        return EXIT_INVARIANT
    if "fail" in statuses or "error" in statuses:
        return EXIT_INPUT
    if "new" in statuses:
        return EXIT_NEW
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbstab",
        description="Exact Hilbert-point weights, F1 and CM weight of weight degenerations.")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--version", action="version",
                        version=f"hilbstab 0.1.0 (kernels: {kernels.BACKEND})")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-fast-path", action="store_true",
                        help="pure-Python enumeration instead of the compiled kernel and "
                             "Hilbert-series recursion")
    common.add_argument("--cross-check", action="store_true",
                        help="also run the independent Hilbert-function and flatness oracles")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report as JSON")
    p.add_argument("job")
    p.add_argument("--m-max", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="m-independence table of the lift weight")
    p.add_argument("job")
    p.add_argument("--m-from", type=int, required=True)
    p.add_argument("--m-to", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force standard monomial dump at one degree")
    p.add_argument("job")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("corpus", parents=[common], help="run a directory of jobs against goldens")
    p.add_argument("directory")
    p.add_argument("--write-missing", action="store_true",
                   help="write goldens for jobs that have none")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
