import pytest

from lambdasv.pipeline import Workspace


@pytest.fixture(scope="session")
def ws():
    return Workspace()


@pytest.fixture(scope="session")
def sv(ws):
    return ws.sv


@pytest.fixture(scope="session")
def witting(ws):
    return ws.witting


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
