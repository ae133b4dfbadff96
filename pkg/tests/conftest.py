"""Collects acceptance-criterion outcomes and prints one line per criterion."""

from __future__ import annotations

import re

_RESULTS: dict[int, tuple[str, str]] = {}
_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number = int(m.group(1))
        detail = dict(report.user_properties).get("detail", "")
        _RESULTS[number] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, detail = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {detail}")
