"""Collects per-criterion outcomes of the acceptance suite for the terminal summary."""

from collections import defaultdict

import pytest

_outcomes = defaultdict(list)
_details = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


@pytest.fixture
def measure(request):
    """``measure("name", value)`` attaches a measured value to the test's criterion line."""
    marker = request.node.get_closest_marker("criterion")

    def _record(name, value):
        if marker is not None:
            _details[marker.args[0]].append(f"{name}={value:.3g}" if isinstance(value, float) else f"{name}={value}")

    return _record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[marker.args[0]].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        status = "PASS" if all(_outcomes[n]) else "FAIL"
        detail = "  ".join(_details[n])
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {detail}".rstrip())
