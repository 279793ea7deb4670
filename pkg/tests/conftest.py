import pytest
from hypothesis import settings

from helpers import P

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture
def two_item():
    """W=1 with p1 = 2 and p2 = 1 + lam; p* = max(2, 1 + lam)."""
    return P((1, 2, 0), (1, 1, 1), W=1)


@pytest.fixture
def acceptance_report():
    """Call with (criterion, passed, detail); lines are printed at the end of the run."""

    def record(name, passed, detail=""):
        line = f"{'PASS' if passed else 'FAIL'}  {name}  {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
