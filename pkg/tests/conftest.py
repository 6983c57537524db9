"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_RESULTS: dict[int, tuple[str, list[str]]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, text = marker.args
    _, states = _RESULTS.setdefault(number, (text, []))
    states.append("PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        text, states = _RESULTS[number]
        verdict = "PASS" if states and all(s == "PASS" for s in states) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {text}")
