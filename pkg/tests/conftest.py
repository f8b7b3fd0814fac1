import pytest

from lcaduality.fields import QQ, PrimeField
from lcaduality.groups import CyclicGroup, FreeAbelianGroup, FreeGroup, symmetric_group

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)


@pytest.fixture
def free2():
    return FreeGroup(2)


@pytest.fixture
def free1():
    return FreeGroup(1)


@pytest.fixture
def zd2():
    return FreeAbelianGroup(2)


@pytest.fixture
def cyclic6():
    return CyclicGroup(6)


@pytest.fixture
def s3():
    return symmetric_group(3)


GROUPS = {
    "free2": lambda: FreeGroup(2),
    "zd2": lambda: FreeAbelianGroup(2),
    "cyclic6": lambda: CyclicGroup(6),
    "s3": lambda: symmetric_group(3),
}
FIELDS = {"F2": F2, "F5": F5, "Q": QQ}


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.failed):
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
