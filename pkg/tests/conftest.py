import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from permls.graph_core import BipartiteGraph, Graph


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def bipartite_graphs(draw, max_a=8, max_b=8):
    n_a = draw(st.integers(0, max_a))
    n_b = draw(st.integers(0, max_b))
    pairs = [(i, j) for i in range(n_a) for j in range(n_b)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return BipartiteGraph.from_sides(n_a, n_b, chosen)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, combinations(range(n), 2))


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@pytest.fixture
def rng():
    return random.Random(20240607)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[num])
