import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from softhappy import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def coloured_graphs(draw, max_n=12, max_k=4, complete=False):
    """(graph, colours, k) with colours in 0..k (1..k when ``complete``)."""
    g = draw(graphs(max_n=max_n))
    k = draw(st.integers(1, max_k))
    lo = 1 if complete else 0
    colours = draw(st.lists(st.integers(lo, k), min_size=g.n, max_size=g.n))
    return g, np.array(colours, dtype=np.int64), k


rhos = st.fractions(0, 1, max_denominator=20).map(lambda f: float(f))


def path4():
    """a-b-c-d with a=1, d=2."""
    return Graph(4, [(0, 1), (1, 2), (2, 3)]), np.array([1, 0, 0, 2])


def star3():
    """K_{1,3}, centre 0 precoloured 1."""
    return Graph(4, [(0, 1), (0, 2), (0, 3)]), np.array([1, 0, 0, 0])


@pytest.fixture
def example():
    from softhappy.fixtures import three_community_instance

    return three_community_instance()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
