import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from packmeasure import Graph  # noqa: E402


def path_graph(n):
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n=n)


def cycle_graph(n):
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n=n)


def star_graph(leaves):
    return Graph.from_edges([(0, i) for i in range(1, leaves + 1)], n=leaves + 1)


def complete_graph(n):
    return Graph.from_edges([(i, j) for i in range(n) for j in range(i + 1, n)], n=n)


@st.composite
def graphs(draw, min_n=1, max_n=30, max_edges=None):
    """Random simple graphs on ``n`` labelled vertices."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return Graph.from_edges([], n=n)
    cap = len(pairs) if max_edges is None else min(max_edges, len(pairs))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=cap))
    return Graph.from_edges(edges, n=n)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def star4():
    return star_graph(4)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        if report.when == "call" or report.failed:
            _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
