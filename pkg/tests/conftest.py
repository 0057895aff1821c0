import random

import pytest
from hypothesis import strategies as st

from cliquelab.fixtures import fig1_graph, fig2_graph, laplante_15
from cliquelab.graph import Graph


@pytest.fixture
def fig1():
    return fig1_graph()


@pytest.fixture
def fig2():
    return fig2_graph()


@pytest.fixture
def lap15():
    return laplante_15()


@pytest.fixture
def triangle():
    return Graph(range(3), [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k2():
    return Graph(range(2), [(0, 1)])


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [p for p, keep in zip(pairs, mask) if keep])


def seeded_graphs(count, max_n, seed, pmin=0.1, pmax=0.9, min_n=0):
    from cliquelab.graph import random_graph

    rng = random.Random(seed)
    return [random_graph(rng.randint(min_n, max_n), rng.uniform(pmin, pmax), rng) for _ in range(count)]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome.upper()[:4], props.get("summary", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, status, summary in sorted(lines):
            terminalreporter.write_line(f"criterion {number}: {status}  {summary}")
