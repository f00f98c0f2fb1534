import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ramsey_minimal.graph import complete, copies, cycle, matching, path, star  # noqa: E402

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    number, title = mark.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "seconds": 0.0})
    if report.failed:
        entry["ok"] = False
    if report.when == "call":
        entry["seconds"] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} ({e['seconds']:.2f}s) {e['title']}")


CATALOG = {
    "K2": complete(2),
    "P3": path(3),
    "P4": path(4),
    "K3": complete(3),
    "K13": star(3),
    "2K2": matching(2),
    "C4": cycle(4),
    "2P3": copies(path(3), 2),
}


@pytest.fixture
def catalog():
    return dict(CATALOG)
