import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent / "oracle"))

collect_ignore = ["oracle/make_golden.py"]

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if not report.nodeid.split("::")[0].endswith("test_acceptance.py"):
        return
    label = dict(report.user_properties).get("criterion", report.nodeid)
    _acceptance.append((label, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")


@pytest.fixture
def criterion(record_property):
    def mark(label):
        record_property("criterion", label)
    return mark
