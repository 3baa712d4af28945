import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20241017, help="seed for randomized property tests")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
