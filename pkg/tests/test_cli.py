import json
import shutil

import pytest

from hilbstab import cli
from hilbstab.groebner import OneParameterSubgroup, flat_limit
from hilbstab.hilbert import hilbert_function
from hilbstab.oracle import oracle_dump
from hilbstab.report import load_job
from hilbstab.stability import hilbert_weight

from conftest import CORPUS_DIR


def write_job(tmp_path, name="job", **fields):
    data = {"num_vars": 3, "generators": ["x0*x2 - x1^2"], "lambda_weights": [2, -1, -1]}
    data.update(fields)
    path = tmp_path / f"{name}.job.json"
    path.write_text(json.dumps(data))
    return path


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_conic_two_lines(capsys):
    code, out, _ = run(capsys, "analyze", CORPUS_DIR / "conic-two-lines.job.json")
    assert code == 0
    report = json.loads(out)
    st = report["stability"]
    assert st["F1"] == "-3/8"
    assert st["w_cm"] == "-3/1"
    assert st["lift_constant"] == "-3/1"
    assert set(st["lift_table"].values()) == {"-3/1"}
    assert report["verdicts"]["m_independence"] == "pass"


def test_analyze_stabilizer(capsys):
    code, out, _ = run(capsys, "analyze", CORPUS_DIR / "conic-stabilizer.job.json")
    assert code == 0
    assert json.loads(out)["stability"]["F1"] == "0/1"


def test_analyze_inhomogeneous_generator(tmp_path, capsys):
    job = write_job(tmp_path, generators=["x0*x2", "x0 + x1*x2"])
    code, out, err = run(capsys, "analyze", job)
    assert code == 1
    assert "generator 1" in err and "homogen" in err
    assert out == ""


@pytest.mark.parametrize("fields, message", [
    ({"lambda_weights": [1, 2]}, "lambda_weights"),
    ({"generators": ["x0*x4"]}, "out of range"),
    ({"num_vars": 0}, "num_vars"),
])
def test_bad_jobs_exit_1(tmp_path, capsys, fields, message):
    code, _, err = run(capsys, "analyze", write_job(tmp_path, **fields))
    assert code == 1 and message in err


def test_invalid_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{")
    code, _, err = run(capsys, "analyze", path)
    assert code == 1 and "invalid JSON" in err


def _strip_timing(report):
    report = json.loads(report)
    report.pop("timing")
    return report


def test_replay_determinism(capsys):
    job = CORPUS_DIR / "twisted-cubic.job.json"
    _, first, _ = run(capsys, "analyze", job)
    _, second, _ = run(capsys, "analyze", job)
    a, b = json.loads(first), json.loads(second)
    assert a["timing"]["seconds"] is not None
    a.pop("timing"), b.pop("timing")
    assert json.dumps(a) == json.dumps(b)


def test_fast_path_off_gives_same_mathematics(capsys):
    job = CORPUS_DIR / "quadric-surface.job.json"
    _, fast, _ = run(capsys, "analyze", job)
    code, slow, _ = run(capsys, "analyze", job, "--no-fast-path", "--cross-check")
    assert code == 0
    fast, slow = _strip_timing(fast), _strip_timing(slow)
    assert slow["backend"] == "python"
    assert slow["verdicts"]["flatness"] == "pass"
    assert slow["verdicts"]["hilbert_paths"] == "pass"
    for key in ("stability", "hilbert", "weights", "flat_limit"):
        assert fast[key] == slow[key]


def test_report_numbers_are_strings(capsys):
    _, out, _ = run(capsys, "analyze", CORPUS_DIR / "rational-normal-quartic.job.json")
    report = json.loads(out)

    def walk(node):
        if isinstance(node, dict):
            for v in node.values():
                yield from walk(v)
        elif isinstance(node, list):
            for v in node:
                yield from walk(v)
        else:
            yield node

    for section in ("hilbert", "weights", "stability", "timing"):
        assert all(isinstance(v, str) or v is None for v in walk(report[section]))
    assert all("/" in v for v in report["stability"]["lift_table"].values())


def test_verify_conic_table(capsys):
    code, out, _ = run(capsys, "verify", CORPUS_DIR / "conic-two-lines.job.json",
                       "--m-from", 2, "--m-to", 8)
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines() if line[:1].isdigit()]
    assert [r[0] for r in rows] == [str(m) for m in range(2, 9)]
    assert [r[1] for r in rows] == ["-3"] * 7
    assert "target\t-3" in out


def test_verify_zero_weights(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", write_job(tmp_path, lambda_weights=[0, 0, 0]),
                       "--m-from", 1, "--m-to", 6)
    assert code == 0
    rows = [line.split("\t")[1] for line in out.splitlines() if line[:1].isdigit()]
    assert rows == ["0"] * 6


def test_verify_adjusts_range_below_onset(capsys):
    code, out, err = run(capsys, "verify", CORPUS_DIR / "rational-normal-quartic.job.json",
                         "--m-from", 0, "--m-to", 5)
    assert code == 0
    assert "below the onset" in err
    assert out.splitlines()[1].startswith("1\t")


def test_verify_corrupted_cache_exits_2(capsys, monkeypatch):
    def corrupt(values):
        values[4] += 1

    monkeypatch.setattr(cli, "TAMPER_HOOK", corrupt)
    code, out, err = run(capsys, "verify", CORPUS_DIR / "conic-two-lines.job.json",
                         "--m-from", 2, "--m-to", 6)
    assert code == 2
    assert "MISMATCH" in out
    assert "[2, 3, 4]" in err


def test_oracle_conic_m2(capsys):
    code, out, _ = run(capsys, "oracle", CORPUS_DIR / "conic-two-lines.job.json", "--m", 2)
    assert code == 0
    lines = out.splitlines()
    rows = [line for line in lines if not line.startswith("#") and line.startswith("x")]
    assert rows == ["x0^2\t4", "x0*x1\t1", "x1^2\t-2", "x1*x2\t-2", "x2^2\t-2"]
    assert "weight_total\t-1" in lines
    assert "hilbert_weight\t1" in lines


def test_oracle_degree_zero(capsys):
    code, out, _ = run(capsys, "oracle", CORPUS_DIR / "conic-two-lines.job.json", "--m", 0)
    assert code == 0
    assert "1\t0" in out.splitlines()
    assert "count\t1" in out and "weight_total\t0" in out


def test_oracle_unit_ideal_is_empty(tmp_path, capsys):
    code, out, _ = run(capsys, "oracle", write_job(tmp_path, generators=["1"]), "--m", 3)
    assert code == 0
    assert "count\t0" in out
    assert len([line for line in out.splitlines() if line.startswith("x")]) == 0


def test_oracle_guard(capsys):
    code, _, err = run(capsys, "oracle", CORPUS_DIR / "rational-normal-quartic.job.json",
                       "--m", 100)
    assert code == 1 and "guard" in err


@pytest.mark.parametrize("path", sorted(CORPUS_DIR.glob("*.job.json")), ids=lambda p: p.name)
def test_oracle_consistency(path):
    job = load_job(path)
    lam = OneParameterSubgroup(tuple(job.lambda_weights))
    lead = flat_limit(job.ideal(), lam).lead
    for m in range(9):
        dump = oracle_dump(lead, lam, m)
        assert dump["count"] == hilbert_function(lead, m, "recursive")
        assert dump["hilbert_weight"] == hilbert_weight(lead, lam, m)


def test_corpus_shipped_all_pass(capsys):
    code, out, _ = run(capsys, "corpus", CORPUS_DIR)
    assert code == 0
    assert "7 jobs, pass: 7" in out


def test_corpus_parallel_matches_serial(capsys):
    code, out, _ = run(capsys, "corpus", CORPUS_DIR, "--jobs", 2)
    assert code == 0 and "pass: 7" in out


def test_corpus_empty_directory(tmp_path, capsys):
    code, out, _ = run(capsys, "corpus", tmp_path)
    assert code == 0
    assert "0 jobs" in out


def test_corpus_perturbed_golden_fails(tmp_path, capsys):
    for name in ("conic-two-lines", "conic-double-line"):
        for suffix in (".job.json", ".expected.json"):
            shutil.copy(CORPUS_DIR / f"{name}{suffix}", tmp_path)
    golden = tmp_path / "conic-two-lines.expected.json"
    data = json.loads(golden.read_text())
    data["stability.F1"] = "-3/7"
    golden.write_text(json.dumps(data))
    code, out, _ = run(capsys, "corpus", tmp_path)
    assert code == 1
    line = next(li for li in out.splitlines() if li.startswith("conic-two-lines"))
    assert "fail" in line and "stability.F1" in line
    assert "conic-double-line" in out and "pass: 1" in out


def test_corpus_missing_golden_is_new(tmp_path, capsys):
    shutil.copy(CORPUS_DIR / "conic-two-lines.job.json", tmp_path)
    code, out, _ = run(capsys, "corpus", tmp_path)
    assert code == 3 and "new" in out
    code, out, _ = run(capsys, "corpus", tmp_path, "--write-missing")
    assert code == 0
    assert (tmp_path / "conic-two-lines.expected.json").exists()
    code, _, _ = run(capsys, "corpus", tmp_path)
    assert code == 0


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "hilbstab", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "hilbstab" in proc.stdout
