import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

REPORT_DIR = Path(__file__).resolve().parent.parent / "reports"

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance exit criterion")


@pytest.fixture
def report_dir():
    REPORT_DIR.mkdir(exist_ok=True)
    return REPORT_DIR


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.outcome == "failed":
        details = [v for k, v in report.user_properties if k == "detail"]
        _criteria[marker] = (report.outcome, details)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), (outcome, details) in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] {number:>2}. {title}"
        if details:
            line += " | " + "; ".join(details)
        terminalreporter.write_line(line)
