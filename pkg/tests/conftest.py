"""Collects acceptance results and prints one PASS/FAIL line per criterion."""
import pytest

_results: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or not marker.args:
        return
    number, title = marker.args[0], marker.args[1] if len(marker.args) > 1 else ""
    entry = _results.setdefault(number, {"title": title, "ok": True, "notes": []})
    if report.when == "call" or report.failed:
        entry["ok"] = entry["ok"] and report.passed
    if report.when == "call":
        entry["notes"].extend(value for key, value in item.user_properties if key == "note")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"acceptance {number:>2}: {status}  {entry['title']}")
        for note in entry["notes"]:
            terminalreporter.write_line(f"               {note}")


@pytest.fixture
def note(request):
    """Attach a measured quantity to the acceptance summary."""

    def add(text):
        request.node.user_properties.append(("note", text))

    return add
