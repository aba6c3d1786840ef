import pytest

from oracles import pascal_rows


@pytest.fixture(scope="session")
def pascal():
    return pascal_rows(200)


# one summary line per acceptance criterion

_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = _acceptance.get(name, "PASS")
        if report.outcome != "passed":
            _acceptance[name] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{status:7} {name}")
