import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semilab.enumeration import enumerate_semigroups  # noqa: E402


@pytest.fixture(scope="session")
def corpus4():
    return [S for n in range(1, 5) for S in enumerate_semigroups(n)]


@pytest.fixture(scope="session")
def corpus5(corpus4):
    return corpus4 + list(enumerate_semigroups(5))


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
