import sys

import pytest

from univjac.arith import GD


def grid(g_lo=3, g_hi=10):
    """Every (g, d) with g in [g_lo, g_hi] and 0 <= d <= 2g-3."""
    return [GD(g, d) for g in range(g_lo, g_hi + 1) for d in range(0, 2 * g - 2)]


@pytest.fixture(scope="session")
def full_grid():
    return grid()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
