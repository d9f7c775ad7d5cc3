import pytest

from bingraph.samples import G1, G2, G3, G4

_acceptance: dict[str, str] = {}


@pytest.fixture
def g1():
    return G1


@pytest.fixture
def g2():
    return G2


@pytest.fixture
def g3():
    return G3


@pytest.fixture
def g4():
    return G4


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, status in _acceptance.items():
        name = nodeid.split("::")[-1].removeprefix("test_")
        terminalreporter.write_line(f"{status}  {name}")
