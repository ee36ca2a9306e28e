import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results = {}


@pytest.fixture
def criterion(request):
    """Tag an acceptance test with its criterion label."""

    def tag(label):
        request.node.user_properties.append(("criterion", label))

    return tag


def pytest_runtest_logreport(report):
    labels = [v for k, v in report.user_properties if k == "criterion"]
    if not labels:
        return
    label = labels[0]
    if report.failed:
        _results[label] = "FAIL"
    elif report.when == "call" and label not in _results:
        _results[label] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_results[label]}  {label}")
