from __future__ import annotations

import re

_CRITERIA: dict[int, tuple[str, str]] = {}
_PATTERN = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[n] = ("PASS" if report.outcome == "passed" else "FAIL", m.group(2))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, name = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} {name.replace('_', ' ')}: {status}")
