"""Shared pytest plumbing: the per-criterion acceptance summary block.

Each test in test_acceptance.py carries an entry in that module's
CRITERIA table; after the run, one PASS/FAIL line is printed per
criterion so the acceptance status is readable without scrolling
through the full test log.
"""

from __future__ import annotations

import sys

_results: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1].split("[")[0]
    if report.when == "call":
        _results[name] = _results.get(name, True) and report.outcome == "passed"
    elif report.outcome == "failed":  # setup/teardown crash
        _results[name] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not _results:
        return
    criteria = getattr(module, "CRITERIA", {})
    ran = [(name, label) for name, label in criteria.items() if name in _results]
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for name, label in ran:
        verdict = "PASS" if _results[name] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {verdict} - {label}")
