import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, str] = {}
_outcomes: dict[int, list[str]] = {}
_item_criterion: dict[str, int] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is None:
            continue
        number, title = mark.args
        _criteria[number] = title
        _item_criterion[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _item_criterion.get(report.nodeid)
    if number is None:
        return
    if report.when == "call" or report.outcome == "failed" or (report.when == "setup" and report.skipped):
        if hasattr(report, "wasxfail"):
            outcome = "xfail"
        else:
            outcome = report.outcome
        _outcomes.setdefault(number, []).append(outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        results = _outcomes.get(number, [])
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        elif "failed" in results:
            status = "FAIL"
        elif "xfail" in results:
            status = "FAIL (known, literal statement does not hold; see test reason)"
        else:
            status = "INCOMPLETE"
        tr.write_line(f"criterion {number:>2} {status:<6} {_criteria[number]}")

