import pytest

from orbit_duality.partitions import GroupType, Partition
from orbit_duality.marked import MarkedPartition

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def label(X, lam, nu=()):
    return MarkedPartition(GroupType.parse(X), Partition(lam), Partition(nu))


@pytest.fixture
def mk():
    return label


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
