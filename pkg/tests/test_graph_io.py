import pytest
from hypothesis import given

from neutralizer.errors import FormatError, RangeError
from neutralizer.families import gen_gn, gen_random_graph
from neutralizer.graph import Graph
from neutralizer.graph_io import load_graph, parse_graph, save_graph, serialize_graph

from .strategies import graphs


def test_parse_single_edge():
    assert parse_graph(b"p sp 2 1\na 1 2 -6\n") == Graph(2, [(0, 1, -6)])


def test_parse_skips_comments_and_blank_lines():
    text = "c æ³¨é\n\np sp 3 2\nc ä¸­é´çæ³¨é\na 1 2 0\na 3 1 7\n"
    assert parse_graph(text) == Graph(3, [(0, 1, 0), (2, 0, 7)])


def test_parse_endpoint_out_of_range():
    with pytest.raises(RangeError):
        parse_graph(b"p sp 2 1\na 1 3 0\n")


@pytest.mark.parametrize("text, line_no", [
    ("p sp 2 1\na 1 2\n", 2),
    ("p sp 2 1\na 1 2 x\n", 2),
    ("a 1 2 3\n", 1),
    ("p sp 2 1\np sp 2 1\n", 2),
    ("p sp 2 1\nq 1 2 3\n", 2),
    ("p sp 2 1\na 1 2 9223372036854775808\n", 2),
    ("p sp 2 1\ncorrupt 9 9 9\na 1 2 -6\n", 2),
    ("p sp 2 1\na 1 2 1_000\n", 2),
    ("p sp 2 1\na 1 2 \u0663\n", 2),
    ("p sp 2 1\na 1 2 +5\n", 2),
])
def test_parse_reports_line_number(text, line_no):
    with pytest.raises(FormatError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line_no == line_no


def test_parse_edge_count_mismatch():
    with pytest.raises(FormatError):
        parse_graph("p sp 2 2\na 1 2 3\n")


def test_parse_missing_problem_line():
    with pytest.raises(FormatError):
        parse_graph("c åªææ³¨é\n")


def test_serialize_g1_header():
    g, _ = gen_gn(1)
    lines = serialize_graph(g).decode("utf-8").split("\n")
    assert lines[0] == "p sp 6 6"
    assert len([line for line in lines if line.startswith("a ")]) == 6
    assert lines[-1] == ""


def test_serialize_has_no_trailing_whitespace():
    data = serialize_graph(Graph(2, [(0, 1, -6)]), comments=["family test"])
    assert data == b"c family test\np sp 2 1\na 1 2 -6\n"
    assert b"\r" not in data


@pytest.mark.parametrize("n", [1, 2, 5, 20, 37])
def test_round_trip_gn(n):
    g, _ = gen_gn(n)
    assert parse_graph(serialize_graph(g)) == g


def test_round_trip_random_graph():
    g = gen_random_graph(30, 120, 50, seed=7)
    assert parse_graph(serialize_graph(g, ["random"])) == g


@given(graphs())
def test_round_trip_arbitrary_graphs(g):
    assert parse_graph(serialize_graph(g)) == g


def test_save_and_load(tmp_path):
    g, _ = gen_gn(3)
    path = tmp_path / "sub" / "g3.gr"
    save_graph(g, str(path), ["family gn n=3"])
    assert load_graph(str(path)) == g
    assert path.read_bytes().startswith(b"c family gn n=3\np sp 14 18\n")
