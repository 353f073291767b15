import pytest
from hypothesis import given
import hypothesis.strategies as st

from neutralizer.errors import PreconditionError, RangeError
from neutralizer.families import gen_gn, gn_closed_form_eta
from neutralizer.graph import (
    INT64_MAX,
    EdgeFilter,
    Graph,
    Potential,
    checked_int64,
    is_neutralizing,
    is_valid_potential,
    path_weight,
    reduce_weights,
)

from .strategies import graphs, potentials, walks


def test_edge_endpoint_out_of_range():
    with pytest.raises(RangeError):
        Graph(2, [(0, 2, 1)])


def test_edge_weight_overflow():
    with pytest.raises(OverflowError):
        Graph(2, [(0, 1, INT64_MAX + 1)])


@pytest.mark.parametrize("edge", [(0, 1, -1.5), (0, 1, 2.0), (0.0, 1, 3), (0, 1, "4")])
def test_edge_rejects_non_integer(edge):
    with pytest.raises(PreconditionError):
        Graph(2, [edge])


def test_vertex_count_rejects_non_integer():
    with pytest.raises(PreconditionError):
        Graph(2.0, [])


def test_potential_rejects_non_integer():
    with pytest.raises(PreconditionError):
        Potential([0, 0.9])
    assert Potential([0, -3]) == [0, -3]


def test_checked_int64_bounds():
    assert checked_int64(INT64_MAX) == INT64_MAX
    with pytest.raises(OverflowError):
        checked_int64(-INT64_MAX - 2)


def test_views_share_zero_edges():
    g = Graph(3, [(0, 1, -2), (1, 2, 0), (2, 0, 3)])
    assert g.view(EdgeFilter.NON_POSITIVE).edge_indices() == [0, 1]
    assert g.view(EdgeFilter.NON_NEGATIVE).edge_indices() == [1, 2]
    assert g.view(EdgeFilter.ZERO).edge_indices() == [1]
    assert g.view(EdgeFilter.NEGATIVE).edge_indices() == [0]
    assert g.view(EdgeFilter.NON_NEGATIVE).out_edges(1) == [1]
    assert g.negative_edge_count() == 1


def test_zero_potential_is_identity():
    g = Graph(2, [(0, 1, -6)])
    assert reduce_weights(g, Potential.zeros(2)).weights() == (-6,)


def test_reduce_weights_on_g3_swaps_sides():
    g, layout = gen_gn(3)
    _, eta = gn_closed_form_eta(3)
    reduced = reduce_weights(g, eta)
    edge_x2_x3 = 6
    edge_y1_y2 = 3
    assert layout.edge_name(g, edge_x2_x3) == "x2->x3"
    assert reduced.edges[edge_x2_x3][2] == -9
    assert layout.edge_name(g, edge_y1_y2) == "y1->y2"
    assert reduced.edges[edge_y1_y2][2] == 18


def test_reduce_weights_overflow():
    g = Graph(2, [(0, 1, INT64_MAX)])
    with pytest.raises(OverflowError):
        reduce_weights(g, Potential([1, 0]))


def test_potential_length_mismatch():
    with pytest.raises(RangeError):
        reduce_weights(Graph(2, []), Potential([0]))


def test_potential_addition_overflow():
    with pytest.raises(OverflowError):
        Potential([INT64_MAX]) + Potential([1])


def test_valid_potential_examples():
    g3, _ = gen_gn(3)
    _, eta = gn_closed_form_eta(3)
    assert is_valid_potential(g3, Potential.zeros(g3.vertex_count))
    assert is_valid_potential(g3, eta)
    assert not is_valid_potential(Graph(2, [(0, 1, 1)]), Potential([0, 5]))


def test_neutralizing_examples():
    g3, _ = gen_gn(3)
    _, eta = gn_closed_form_eta(3)
    assert not is_neutralizing(g3, eta)
    assert is_neutralizing(Graph(3, [(0, 1, -1), (1, 2, 1)]), Potential([0, -1, -1]))
    assert is_neutralizing(Graph(2, [(0, 1, 4), (1, 0, 0)]), Potential.zeros(2))


@given(st.data())
def test_reweighting_telescopes(data):
    g = data.draw(graphs())
    phi = data.draw(potentials(g.vertex_count))
    start, end, path = data.draw(walks(g))
    reduced = reduce_weights(g, phi)
    assert path_weight(reduced, path) == path_weight(g, path) + phi[start] - phi[end]


@given(st.data())
def test_reweighting_composes(data):
    g = data.draw(graphs())
    phi1 = data.draw(potentials(g.vertex_count))
    phi2 = data.draw(potentials(g.vertex_count))
    assert reduce_weights(reduce_weights(g, phi1), phi2) == reduce_weights(g, phi1 + phi2)


@given(st.data())
def test_neutralizing_implies_valid(data):
    g = data.draw(graphs())
    phi = data.draw(potentials(g.vertex_count, bound=20))
    if is_neutralizing(g, phi):
        assert is_valid_potential(g, phi)
