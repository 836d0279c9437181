import pytest

from moschext.mosch_core import universe


@pytest.fixture(scope="session")
def U1():
    return universe(("a", "b"), 1)


@pytest.fixture(scope="session")
def U2():
    return universe(("a", "b"), 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
