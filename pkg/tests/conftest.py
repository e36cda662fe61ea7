from __future__ import annotations

import pytest

from v3reduce.census import enumerate_census

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def census():
    """Census levels v = 7..10, keyed by v."""
    return {lv.v: lv for lv in enumerate_census(10)}


@pytest.fixture(scope="session")
def census_members(census):
    return [g for lv in census.values() for g in lv.members()]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
