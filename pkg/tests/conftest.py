import itertools
from functools import lru_cache

import pytest

from su3label.weights import is_physical


@lru_cache(maxsize=None)
def physical_up_to(top):
    return tuple(m for m in itertools.product(range(1, top + 1), repeat=6) if is_physical(m))


@pytest.fixture(scope="session")
def small_physical():
    return physical_up_to(4)


# acceptance lines are collected here and echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
