import json
import shutil
import subprocess
import sys

import pytest

from g2skt import tables
from g2skt.cli import TABLES, emit_table, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_all_only_dc71(capsys):
    code, out, _ = run(capsys, "check-all", "--only", "dc71")
    assert code == 0
    assert out.startswith("PASS  dc71")
    assert "1/1 exact checks passed" in out


def test_check_all_json(capsys):
    code, out, _ = run(capsys, "check-all", "--only", "c70", "--only", "skt-solve", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "g2skt/1" and doc["pass"]
    assert [c["check_id"] for c in doc["checks"]] == ["c70", "skt-solve"]


def test_check_all_fault_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(tables, "BRACKETS_REAL_TEXT", tables.BRACKETS_REAL_TEXT.replace("[b1,b2]=-b4", "[b1,b2]=+b4"))
    code, out, _ = run(capsys, "check-all", "--only", "brackets")
    assert code == 1 and out.startswith("FAIL  brackets")


def test_check_all_unknown_id(capsys):
    code, _, err = run(capsys, "check-all", "--only", "nope")
    assert code == 2 and "unknown check id" in err


def test_metric_in_region(capsys):
    code, out, _ = run(capsys, "metric", "3", "1", "1")
    assert code == 0
    assert "lambda = (1/3, 4/3, 1/3, 3, 2, 1, 1)" in out
    for line in ("positive definite: yes", "J-compatible: yes", "torus invariant: yes", "dc = 0: yes"):
        assert line in out


def test_metric_biinvariant(capsys):
    code, out, _ = run(capsys, "metric", "96", "32", "96")
    assert code == 0
    assert "bi-invariant: g = −K with λ = 1 (yes)" in out


def test_metric_json(capsys):
    code, out, _ = run(capsys, "metric", "3/2", "1/2", "1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "g2skt/1"
    assert len(doc["metric"]) == 14 and all(len(r) == 14 for r in doc["metric"])
    assert all(doc["certificates"].values())


def test_metric_out_of_region(capsys):
    code, out, _ = run(capsys, "metric", "1", "2", "1")
    assert code == 2 and "a2 < a1 violated" in out


def test_metric_bad_number(capsys):
    code, _, err = run(capsys, "metric", "one", "2", "1")
    assert code == 2 and "not a rational number" in err


def test_sample_text_and_reproducible(capsys):
    code, first, _ = run(capsys, "sample", "--n", "20", "--seed", "3", "--json")
    _, second, _ = run(capsys, "sample", "--n", "20", "--seed", "3", "--json")
    assert code == 0 and first == second
    doc = json.loads(first)
    assert doc["accepted"] == 20 and doc["pass"] and doc["prng"] == "numpy PCG64"


def test_sample_forced_point(capsys):
    code, out, _ = run(capsys, "sample", "--n", "1", "--seed", "0", "--point", "96", "32", "96", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["accepted"] == 1 and doc["max_dc_residual"] < 1e-9


def test_sample_zero_tolerance_is_bad_input(capsys):
    code, _, err = run(capsys, "sample", "--n", "5", "--seed", "1", "--tol", "0")
    assert code == 2 and "tolerance" in err


def test_sample_no_accepted_points_warns(capsys):
    code, _, err = run(capsys, "sample", "--n", "2", "--seed", "1", "--box", "0", "1", "5", "6", "0", "1", "--max-draws", "50")
    assert code == 1 and "warning" in err


def test_group_check(capsys):
    code, out, _ = run(capsys, "group-check", "--n", "10", "--seed", "2")
    assert code == 0 and out.rstrip().endswith("PASS")


def test_group_check_bad_n(capsys):
    code, _, _ = run(capsys, "group-check", "--n", "0", "--seed", "2")
    assert code == 2


@pytest.mark.parametrize("table", TABLES)
def test_emit_deterministic(table):
    assert emit_table(table) == emit_table(table)
    doc = json.loads(emit_table(table, as_json=True))
    assert doc["schema"] == "g2skt/1" and doc["table"] == table and doc["entries"]


def test_emit_counts(capsys):
    assert len(json.loads(emit_table("dc71", True))["entries"]) == 16
    assert len(json.loads(emit_table("c70", True))["entries"]) == 20
    assert len(emit_table("d-table").splitlines()) == 14
    assert emit_table("brackets").splitlines()[0] == "[b1,b2]    = -b4"
    first = json.loads(emit_table("brackets", True))["entries"][0]
    assert first == {"i": 1, "j": 2, "terms": [{"k": 4, "c": "-1"}]}


def test_emit_brackets_layout_matches_reference():
    text = emit_table("brackets")
    compact = {line.replace(" ", "") for line in text.splitlines()}
    reference = set(tables.BRACKETS_REAL_TEXT.split())
    assert compact == reference


def test_emit_unknown_table(capsys):
    code, _, err = run(capsys, "emit", "nope")
    assert code == 2 and "unknown table" in err


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["metric", "1"])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("g2skt") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["g2skt", "emit", "droots"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("alpha1: b1 -> i, b12 -> i")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "g2skt.cli", "emit", "metric-components"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("g(b1,b1) = λ0")
