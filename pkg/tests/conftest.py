import pytest

from bddkenum.fixtures import psi as _psi

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def psi():
    return _psi()


@pytest.fixture(scope="session")
def psi_ids(psi):
    return {name: psi.node_id(name) for name in "abcdef"}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
