import json

import pytest

from g2skt import tables
from g2skt.checks import CHECKS, SCHEMA, check_ids, run_check, run_checks


def test_registry_order_is_stable():
    assert check_ids()[:4] == ["phi-contraction", "cross-product", "dimension", "brackets"]
    assert "dc71" in check_ids() and "c70" in check_ids()


@pytest.mark.parametrize("check_id", ["brackets", "jacobi", "roots", "brackets-complex", "samelson", "d-table", "c70", "dc71", "skt-solve", "converse"])
def test_fast_checks_pass(check_id):
    report = run_check(check_id)
    assert report.status == "pass", report.certificate.computed
    assert report.certificate.equal
    json.dumps(report.to_dict())


def test_only_filter():
    reports = run_checks(["dc71"])
    assert [r.check_id for r in reports] == ["dc71"]


def test_injected_bracket_fault_is_caught(monkeypatch):
    faulty = tables.BRACKETS_REAL_TEXT.replace("[b1,b2]=-b4", "[b1,b2]=+b4")
    assert faulty != tables.BRACKETS_REAL_TEXT
    monkeypatch.setattr(tables, "BRACKETS_REAL_TEXT", faulty)
    report = run_check("brackets")
    assert report.status == "fail"
    assert any("(1, 2)" in m for m in report.certificate.computed["mismatches"])


def test_injected_d_table_fault_is_caught(monkeypatch):
    broken = dict(tables.D_TABLE)
    broken["H1"] = [("2*i", labels) if k == 0 else (c, labels) for k, (c, labels) in enumerate(broken["H1"])]
    monkeypatch.setattr(tables, "D_TABLE", broken)
    assert run_check("d-table").status == "fail"


def test_injected_solution_fault_is_caught(monkeypatch):
    broken = {k: dict(v) for k, v in tables.SKT_SOLUTION.items()}
    broken[0][3] = "1/7"
    monkeypatch.setattr(tables, "SKT_SOLUTION", broken)
    assert run_check("skt-solve").status == "fail"


def test_crashing_check_reports_fail(monkeypatch):
    def boom():
        raise RuntimeError("boom")

    monkeypatch.setitem(CHECKS, "jacobi", ("Jacobi identity", boom))
    report = run_check("jacobi")
    assert report.status == "fail" and "boom" in report.detail


def test_schema_constant():
    assert SCHEMA == "g2skt/1"
