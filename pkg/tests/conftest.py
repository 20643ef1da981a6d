import pytest

from psisum.coeffs import build_A, build_C_recurrence

_ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ctable():
    return build_C_recurrence(60)


@pytest.fixture(scope="session")
def atable():
    return build_A(40)
