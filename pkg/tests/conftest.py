import random

import pytest

_acceptance = {}


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_runtest_logreport(report):
    if "acceptance" in report.keywords and (report.when == "call" or report.outcome != "passed"):
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        terminalreporter.write_line(f"{outcome.upper():7s} {nodeid.split('::')[-1]}")
