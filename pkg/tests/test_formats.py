import random

import networkx as nx
import pytest
from hypothesis import given

from nkdl.errors import BadCharError, ParseError, SelfLoopError, TruncatedError
from nkdl.formats import parse_edge_list, parse_graph6, read_graph_file, write_edge_list, write_graph6
from nkdl.graph_core import Graph
from nkdl.oracle import enumerate_graphs

from .conftest import FIXTURES, complete, graphs, path, random_graph


def test_parse_graph6_examples():
    assert parse_graph6("C?") == Graph(4)
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6("Bg") == path(3)
    assert parse_graph6(">>graph6<<Bw\n") == complete(3)
    assert parse_graph6(b"Bw") == complete(3)


def test_write_graph6_examples():
    assert write_graph6(complete(3)) == "Bw"
    assert write_graph6(Graph(4)) == "C?"
    assert write_graph6(Graph(0)) == "?"


def test_graph6_errors():
    with pytest.raises(BadCharError):
        parse_graph6("B!")
    with pytest.raises(TruncatedError):
        parse_graph6("E")
    with pytest.raises(TruncatedError):
        parse_graph6("")
    with pytest.raises(ParseError):
        parse_graph6("Bw?")


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    assert write_graph6(g).encode() == nx.to_graph6_bytes(nxg, header=False).strip()


def test_graph6_long_size_field():
    rng = random.Random(0)
    for n in (62, 63, 100):
        g = random_graph(rng, n, 0.1)
        text = write_graph6(g)
        assert parse_graph6(text) == g
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(g.edges)
        assert text.encode() == nx.to_graph6_bytes(nxg, header=False).strip()


@pytest.mark.parametrize("n", range(0, 8))
def test_graph6_round_trip_enumeration(n):
    for g in enumerate_graphs(n):
        text = write_graph6(g)
        assert all(63 <= ord(c) <= 126 for c in text)
        assert parse_graph6(text) == g


def test_parse_edge_list():
    assert parse_edge_list("n=3\n0 1\n1 2") == path(3)
    assert parse_edge_list("0 1\n1 2\n# comment") == path(3)
    assert parse_edge_list("n=5\n0 1  # trailing\n") == Graph(5, [(0, 1)])
    with pytest.raises(SelfLoopError):
        parse_edge_list("0 0")
    with pytest.raises(ParseError):
        parse_edge_list("0 1 2")
    with pytest.raises(ParseError):
        parse_edge_list("a b")


@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert parse_edge_list(write_edge_list(g)) == g


def test_fixture_files_agree():
    assert read_graph_file(FIXTURES / "cube.el") == read_graph_file(FIXTURES / "cube.g6")
    assert read_graph_file(FIXTURES / "mobius.el") == read_graph_file(FIXTURES / "mobius.g6")
