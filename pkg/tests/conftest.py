import pytest

from sierpgraph.graph import (
    BaseGraph,
    complete_graph,
    cycle_graph,
    tailed_triangle_graph,
    path_graph,
    star_graph,
)

TAILED_TRIANGLE_TEXT = "7 7\n0 2\n1 3\n2 3\n2 4\n3 4\n4 5\n5 6"

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def tt7():
    return tailed_triangle_graph()


@pytest.fixture
def small_named():
    """A handful of hand-picked graphs covering the degenerate cases."""
    return {
        "K1": BaseGraph(1),
        "P2": path_graph(2),
        "P4": path_graph(4),
        "K3": complete_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K13": star_graph(3),
        "tt7": tailed_triangle_graph(),
    }


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
