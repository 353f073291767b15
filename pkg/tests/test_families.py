import pytest

from neutralizer.baseline import bellman_ford
from neutralizer.engine import compute_eta, engine_step
from neutralizer.errors import PreconditionError, RangeError
from neutralizer.families import (
    GN_MAX,
    GnLayout,
    Mismatch,
    gen_alternating_path,
    gen_gn,
    gen_hard_path,
    gen_random_dag,
    gen_random_graph,
    gen_random_path,
    gn_closed_form_eta,
    gn_closed_form_reduced,
    gn_self_similar_mismatch,
)
from neutralizer.graph import Graph

import networkx as nx


def _expected_gn_edges(n, layout):
    """
    按构造公式逐项求幂，独立于生成器重新算出 G_n 的边
    """
    x, y = layout.x, layout.y
    edges = []
    for i in range(n):
        edges += [
            (x(2 * i), x(2 * i + 1), -2 * pow(3, n - i)),
            (x(2 * i + 1), x(2 * i + 2), 2 * pow(3, n - i - 1)),
            (y(2 * i), y(2 * i + 1), -pow(3, n - i)),
            (y(2 * i + 1), y(2 * i + 2), 0),
            (x(2 * i + 1), y(2 * i + 2), pow(3, n - i - 1)),
            (y(2 * i + 1), x(2 * i + 2), 0),
        ]
    return edges


def test_gn_layout():
    layout = GnLayout(3)
    assert (layout.vertex_count, layout.edge_count) == (14, 18)
    assert (layout.x(6), layout.y(0), layout.y(6)) == (6, 7, 13)
    assert [layout.name(v) for v in (0, 6, 7, 13)] == ["x0", "x6", "y0", "y6"]


def test_gen_g1_edges():
    g, _ = gen_gn(1)
    assert g == Graph(6, [(0, 1, -6), (1, 2, 2), (3, 4, -3), (4, 5, 0), (1, 5, 1), (4, 2, 0)])


@pytest.mark.parametrize("n", [1, 2, 3, 10, GN_MAX])
def test_gen_gn_matches_formula(n):
    g, layout = gen_gn(n)
    assert g.vertex_count == 4 * n + 2
    assert g.edge_count == 6 * n
    assert list(g.edges) == _expected_gn_edges(n, layout)


def test_gen_g3_first_edge():
    g, _ = gen_gn(3)
    assert g.edges[0][2] == -54


@pytest.mark.parametrize("n", [0, GN_MAX + 1])
def test_gen_gn_range(n):
    with pytest.raises(RangeError):
        gen_gn(n)
    with pytest.raises(RangeError):
        gn_closed_form_eta(n)


def test_closed_form_eta_examples():
    layout = GnLayout(3)
    eta_minus, eta = gn_closed_form_eta(3)
    assert eta[layout.x(6)] == -40
    assert eta[layout.y(6)] == -41
    assert eta_minus[layout.x(1)] == -54
    for n in (1, 5, 20):
        layout = GnLayout(n)
        _, eta = gn_closed_form_eta(n)
        assert eta[layout.x(0)] == eta[layout.y(0)] == 0


def test_closed_form_reduced_examples():
    g, layout = gen_gn(3)
    reduced = gn_closed_form_reduced(3)
    by_name = {layout.edge_name(g, i): w for i, (_, _, w) in enumerate(reduced.edges)}
    assert by_name["y1->x2"] == 27
    assert by_name["y1->y2"] == 54
    assert by_name["x2->x3"] == -9
    assert all(w >= 0 for w in gn_closed_form_reduced(1).weights())


@pytest.mark.parametrize("n", [1, 2, 7, 15])
def test_engine_matches_closed_forms(n):
    g, _ = gen_gn(n)
    expected_minus, expected_eta = gn_closed_form_eta(n)
    result, reduced = engine_step(g)
    assert result.eta_minus == expected_minus
    assert result.eta == expected_eta
    assert reduced == gn_closed_form_reduced(n)
    assert gn_self_similar_mismatch(n, reduced) is None


def test_self_similar_mismatch_reports_edge():
    g, _ = gen_gn(3)
    _, reduced = engine_step(g)
    tampered = reduced.with_weights(reduced.weights()[:-1] + (reduced.weights()[-1] + 1,))
    mismatch = gn_self_similar_mismatch(3, tampered)
    assert isinstance(mismatch, Mismatch)
    assert mismatch.name == "y5->x6"
    assert str(mismatch).startswith("mismatch n=3 self-similar edge y5->x6: expected ")


def test_hard_path_examples():
    assert gen_hard_path(1) == [-1, 1]
    assert gen_hard_path(2) == [-2, 1, -1, 2]
    assert gen_hard_path(3) == [-3, 1, -1, 2, -2, 1, -1, 3]


@pytest.mark.parametrize("s", [1, 5, 12])
def test_hard_path_alternates(s):
    p = gen_hard_path(s)
    assert len(p) == 2 ** s
    assert all((w < 0) if i % 2 == 0 else (w > 0) for i, w in enumerate(p))


@pytest.mark.parametrize("s", [0, 31])
def test_hard_path_range(s):
    with pytest.raises(RangeError):
        gen_hard_path(s)


def test_alternating_path():
    assert gen_alternating_path(1) == [-1, 1]
    assert gen_alternating_path(3) == [-1, 1, -1, 1, -1, 1]
    with pytest.raises(PreconditionError):
        gen_alternating_path(0)


def test_random_graph_is_deterministic():
    a = gen_random_graph(50, 300, 100, seed=2024)
    b = gen_random_graph(50, 300, 100, seed=2024)
    assert a == b
    assert a != gen_random_graph(50, 300, 100, seed=2025)


def test_random_graph_shape():
    g = gen_random_graph(20, 150, 30, seed=3)
    assert g.vertex_count == 20
    assert g.edge_count == 150
    pairs = [(u, v) for u, v, _ in g.edges]
    assert len(set(pairs)) == len(pairs)
    assert all(u != v for u, v in pairs)


@pytest.mark.parametrize("seed", range(10))
def test_random_graph_has_no_negative_cycle(seed):
    g = gen_random_graph(40, 200, 50, seed)
    for source in (0, 39):
        bellman_ford(g, source)


def test_random_graph_zero_potential_range():
    g = gen_random_graph(15, 60, 9, seed=1, potential_range=0)
    assert all(0 <= w <= 9 for w in g.weights())


def test_random_graph_rejects_too_many_edges():
    with pytest.raises(RangeError):
        gen_random_graph(3, 7, 10, seed=0)


def test_random_path():
    p = gen_random_path(500, 100, seed=9)
    assert len(p) == 500
    assert all(-100 <= w <= 100 for w in p)
    assert p == gen_random_path(500, 100, seed=9)


def test_random_dag_is_acyclic():
    for seed in range(10):
        g = gen_random_dag(10, 0.4, 20, seed)
        digraph = nx.DiGraph([(u, v) for u, v, _ in g.edges])
        assert nx.is_directed_acyclic_graph(digraph)
        compute_eta(g)
