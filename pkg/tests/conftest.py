import pytest

SEVEN_POINT = [-8, -5, -3, -1, 2, 7, 10]
FOUR_SINGULAR = [-10065, -8678, -6, 0]
SIX_WIDE = [-10**7, -9 * 10**6, 0, 1, 10, 10**5]
VENUS = [
    "-1.4", "-0.44", "-0.3", "-0.24", "-0.22", "-0.13", "-0.05",
    "0.06", "0.1", "0.18", "0.2", "0.39", "0.48", "0.63", "1.01",
]

ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture
def seven():
    return list(SEVEN_POINT)


@pytest.fixture
def four_singular():
    return list(FOUR_SINGULAR)


@pytest.fixture
def six_wide():
    return list(SIX_WIDE)


@pytest.fixture
def venus():
    return list(VENUS)
