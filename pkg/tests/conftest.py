"""Shared fixtures and the acceptance-criteria summary.

Tests marked @pytest.mark.acceptance(n, title) are aggregated per criterion
number, and the terminal summary prints one pass/fail line for each.
"""

from __future__ import annotations

from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden"

_results: dict[int, dict[str, object]] = {}


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    number = marker.args[0]
    title = marker.args[1] if len(marker.args) > 1 else ""
    entry = _results.setdefault(number, {"title": title, "passed": True, "ran": 0})
    entry["ran"] += 1
    if report.outcome != "passed":
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        verdict = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {entry['title']}")
