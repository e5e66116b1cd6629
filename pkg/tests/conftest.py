from __future__ import annotations

import os
import sys

import pytest

from ropesweep.cutwidth import SmallGraph

sys.path.insert(0, os.path.dirname(__file__))

LONG = os.environ.get("ROPESWEEP_LONG") == "1"

# Lines printed by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(config, items):
    if LONG:
        return
    skip = pytest.mark.skip(reason="long run; set ROPESWEEP_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def example_graph() -> SmallGraph:
    from graphgen import improvable_example

    return improvable_example()
