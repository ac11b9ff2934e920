import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_results: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): an acceptance criterion")


def pytest_runtest_logreport(report):
    label = dict(report.user_properties).get("acceptance")
    if label is None:
        return
    if report.failed:
        _results[label] = "FAIL"
    elif report.when == "call":
        _results.setdefault(label, "PASS")


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        item.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results):
        terminalreporter.write_line(f"{_results[label]}  {label}")

