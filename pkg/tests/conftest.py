import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

FIXTURES = Path(__file__).parent / "fixtures"


def load(name):
    from kauer.io import read_document

    return read_document(FIXTURES / name)


@pytest.fixture
def fixture_doc():
    return load


@pytest.fixture
def fixture_graph():
    return lambda name: load(name).graph()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
