from pathlib import Path

import pytest

from eulercat import new_category, point
from eulercat.io import load_network

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

TEN_NODE_H = {"A1": 1, "B1": 1, "C1": 0, "D2": 1, "E2": 2, "F2": 3,
              "G2": 0, "H3": 3, "I3": 4, "J3": 3}


@pytest.fixture
def pt():
    return point("a")


@pytest.fixture
def parallel():
    return new_category(["a", "b"], [[1, 2], [0, 1]])


@pytest.fixture
def groupoid():
    return new_category(["a", "b"], [[1, 1], [1, 1]])


@pytest.fixture
def chain2():
    return new_category(["p", "q"], [[1, 1], [0, 1]])


@pytest.fixture
def ten_node():
    return load_network(FIXTURES / "ten-node-network.json")


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
