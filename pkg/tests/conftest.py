from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from g2skt.scalars import FieldElement

settings.register_profile("default", max_examples=25, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_fractions = small_fractions.filter(lambda q: q != 0)
field_elements = st.builds(FieldElement, small_fractions, small_fractions, small_fractions, small_fractions)
real_elements = st.builds(FieldElement, small_fractions, small_fractions)
rational_vectors = st.lists(small_fractions, min_size=7, max_size=7)
g2_coords = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=14, max_size=14)


# -- acceptance summary --------------------------------------------------------------

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _ACCEPTANCE[name] = ("PASS" if report.passed else "FAIL", getattr(report, "acceptance_note", ""))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.acceptance_note = getattr(item, "acceptance_note", "")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status, note = _ACCEPTANCE[name]
        num, _, label = name.removeprefix("test_criterion_").partition("_")
        line = f"{status}  criterion {int(num):2d}  {label.replace('_', ' ')}"
        terminalreporter.write_line(line + (f"  ({note})" if note else ""))
