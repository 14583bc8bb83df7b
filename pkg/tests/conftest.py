import pytest

from polyred import make_field

# One line per acceptance criterion, printed after the run regardless of
# capture settings; test_acceptance.py appends to this.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def F1():
    return make_field(1)


@pytest.fixture(scope="session")
def F4():
    return make_field(4)


@pytest.fixture(scope="session")
def F8():
    return make_field(8)


@pytest.fixture(scope="session")
def F12():
    return make_field(12)
