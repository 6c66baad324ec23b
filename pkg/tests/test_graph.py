import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import coloured_graphs, graphs, rhos
from softhappy import Graph, PartialColouring, happiness, is_rho_happy, same_colour_degree
from softhappy.exceptions import ContractViolation, ParameterError
from softhappy.graph import happy_thresholds
from softhappy.sbm import induced_colouring


def star(leaves, same):
    g = Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    colours = [1] + [1] * same + [2] * (leaves - same)
    return g, colours


def test_deg8_with_four_same_is_half_happy():
    g, c = star(8, 4)
    assert is_rho_happy(g, c, 0, 0.5)


def test_deg9_with_four_same_is_not_half_happy():
    g, c = star(9, 4)
    assert not is_rho_happy(g, c, 0, 0.5)


def test_triangle_counts():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert happiness(g, [1, 1, 2], 0.5).count == 2
    assert happiness(g, [1, 1, 2], 1.0).count == 0


def test_example_community_colouring(example):
    col = induced_colouring(example.assignment)
    assert happiness(example.graph, col, 0.5).count == 14
    assert same_colour_degree(example.graph, col, 2) == 3
    assert sorted(example.graph.neighbours(2).tolist()) == [0, 1, 3, 7, 12]


def test_same_colour_degree_edge_cases():
    assert same_colour_degree(Graph(1), [1], 0) == 0
    assert same_colour_degree(Graph(2, [(0, 1)]), [1, 1], 1) == 1
    with pytest.raises(ContractViolation):
        same_colour_degree(Graph(2, [(0, 1)]), [1, 0], 1)


def test_isolated_vertex_is_always_happy():
    assert is_rho_happy(Graph(2), [1, 2], 0, 1.0)


def test_uncoloured_vertices_are_unhappy():
    g = Graph(2, [(0, 1)])
    assert happiness(g, [0, 0], 0.0).count == 0


@pytest.mark.parametrize(
    "rho, deg, expected",
    [(0.1, 10, 1), (0.3, 10, 3), (0.7, 10, 7), (0.6, 5, 3), (0.5, 9, 5), (1.0, 7, 7), (0.0, 4, 0)],
)
def test_thresholds_exact_at_integer_products(rho, deg, expected):
    # float products like 0.7 * 10 = 7.000000000000001 must not round up
    assert happy_thresholds(np.array([deg]), rho)[0] == expected


def test_graph_rejects_bad_edges():
    with pytest.raises(ParameterError):
        Graph(3, [(0, 0)])
    with pytest.raises((ParameterError, IndexError)):
        Graph(3, [(0, 3)])


def test_graph_is_immutable():
    g = Graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        g.indices[0] = 2


def test_colouring_length_mismatch():
    with pytest.raises(ContractViolation):
        happiness(Graph(3), [1, 1], 0.5)


@given(coloured_graphs(complete=True), rhos, rhos)
def test_happy_set_shrinks_as_rho_grows(data, r1, r2):
    g, c, _ = data
    lo, hi = sorted((r1, r2))
    h_lo, h_hi = happiness(g, c, lo).happy, happiness(g, c, hi).happy
    assert not np.any(h_hi & ~h_lo)


@given(coloured_graphs(complete=True))
def test_everyone_happy_at_rho_zero(data):
    g, c, _ = data
    assert happiness(g, c, 0).count == g.n


@given(graphs())
def test_single_colour_is_fully_happy(g):
    assert happiness(g, np.ones(g.n, dtype=int), 1).count == g.n


@given(coloured_graphs(complete=True), rhos, st.randoms(use_true_random=False))
def test_happiness_ignores_colour_names(data, rho, rnd):
    g, c, k = data
    perm = list(range(1, k + 1))
    rnd.shuffle(perm)
    relabelled = np.array([perm[x - 1] for x in c])
    assert np.array_equal(happiness(g, c, rho).happy, happiness(g, relabelled, rho).happy)


@given(graphs(), st.randoms(use_true_random=False))
def test_edge_list_round_trip(g, rnd):
    edges = [tuple(e) for e in g.edges().tolist()]
    shuffled = [(v, u) if rnd.random() < 0.5 else (u, v) for u, v in edges]
    rnd.shuffle(shuffled)
    again = Graph(g.n, shuffled)
    assert again == g
    assert [tuple(e) for e in again.edges().tolist()] == edges


@given(coloured_graphs(), rhos)
def test_vectorised_happiness_matches_per_vertex(data, rho):
    g, c, k = data
    report = happiness(g, PartialColouring(c, k), rho)
    for v in range(g.n):
        expected = c[v] != 0 and is_rho_happy(g, c, v, rho)
        assert report.happy[v] == expected


@given(st.floats(0, 1), st.lists(st.integers(0, 10**6), min_size=1, max_size=20))
def test_thresholds_exact_for_any_float_rho(rho, degs):
    from fractions import Fraction
    import math

    got = happy_thresholds(np.array(degs), rho).tolist()
    assert got == [math.ceil(Fraction(repr(rho)) * d) for d in degs]
