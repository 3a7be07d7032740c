from __future__ import annotations

import pytest

from corpus import example1, example2

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex2():
    return example2()


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
