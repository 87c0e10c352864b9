import networkx as nx
import pytest

from data.connectors import (
    BENCHMARK_GRAPHS,
    MATRIX_MARKET,
    complement_graph,
    graph_id,
    load_best_known,
    load_graph,
    parse_edge_list,
    standin_graph,
    write_edge_list,
)
from errors import InputError


def test_edge_list_is_one_based():
    graph = parse_edge_list("1 2\n2 3\n")
    assert graph.number_of_nodes() == 3
    assert sorted(graph.edges()) == [(0, 1), (1, 2)]


def test_complement_of_path():
    graph = complement_graph(parse_edge_list("1 2\n2 3"))
    assert sorted(graph.edges()) == [(0, 2)]
    assert nx.number_of_selfloops(graph) == 0


def test_dimacs_lines_duplicates_and_loops():
    text = "c comment\np edge 5 3\ne 1 2\ne 2 1\ne 3 3\n"
    graph = parse_edge_list(text)
    assert graph.number_of_nodes() == 5
    assert sorted(graph.edges()) == [(0, 1)]


@pytest.mark.parametrize("text", ["1 x\n", "1\n", "0 2\n", "p edge\n"])
def test_malformed_edge_lists(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_malformed_line_number_is_reported():
    with pytest.raises(InputError, match="line 2"):
        parse_edge_list("1 2\nfoo bar\n")


def test_matrix_market(tmp_path):
    path = tmp_path / "p3.mtx"
    path.write_text("%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n3 2\n", encoding="utf-8")
    graph = load_graph(str(path), MATRIX_MARKET)
    assert graph.number_of_nodes() == 3
    assert sorted(graph.edges()) == [(0, 1), (1, 2)]
    assert sorted(load_graph(str(path), MATRIX_MARKET, complement=True).edges()) == [(0, 2)]


def test_load_graph_errors(tmp_path):
    with pytest.raises(InputError):
        load_graph(str(tmp_path / "missing.txt"))
    path = tmp_path / "g.txt"
    path.write_text("1 2\n", encoding="utf-8")
    with pytest.raises(InputError):
        load_graph(str(path), "graphml")


def test_write_and_reload_edge_list(tmp_path):
    graph = nx.cycle_graph(5)
    graph.add_node(5)
    path = tmp_path / "cycle.txt"
    write_edge_list(graph, str(path))
    loaded = load_graph(str(path))
    assert loaded.number_of_nodes() == 6
    assert sorted(loaded.edges()) == sorted(tuple(sorted(e)) for e in graph.edges())


def test_graph_id():
    assert graph_id("data/frb30-15-1.mtx") == "frb30-15-1"
    assert graph_id("toy.txt") == "toy"


def test_standin_density():
    graph = standin_graph("frb30-15-1", n=50, seed=3)
    vertices, edges = BENCHMARK_GRAPHS["frb30-15-1"]
    expected = round(edges / (vertices * (vertices - 1) / 2) * 50 * 49 / 2)
    assert graph.number_of_nodes() == 50
    assert graph.number_of_edges() == expected
    assert sorted(standin_graph("frb30-15-1", n=50, seed=3).edges()) == sorted(graph.edges())
    with pytest.raises(InputError):
        standin_graph("frb99-1-1")


def test_best_known_table(tmp_path):
    path = tmp_path / "best.csv"
    path.write_text("graph,constraint,best_known\nfrb30-15-1,U10,420\n", encoding="utf-8")
    assert load_best_known(str(path)) == {("frb30-15-1", "U10"): 420}
    path.write_text("graph,constraint,best_known\nfrb30-15-1,U10,lots\n", encoding="utf-8")
    with pytest.raises(InputError):
        load_best_known(str(path))
