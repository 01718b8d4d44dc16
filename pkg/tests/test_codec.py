from __future__ import annotations

from misbench.codec import (
    detect_format,
    parse_edge_list,
    parse_graph6,
    parse_graphs,
    read_graphs,
    serialize_edge_list,
    serialize_graph6,
)
from misbench.corpus import to_networkx
from misbench.exception import GraphFormatError, GuardViolation
from misbench.graph import Graph

from graphs import graphs
from hypothesis import given
import networkx as nx
import pytest


@pytest.mark.parametrize(
    ("text", "graph"),
    [
        pytest.param("Bw", Graph.complete(3), id="K3"),
        pytest.param("@", Graph.empty(1), id="K1"),
        pytest.param("Bg", Graph.path(3), id="P3"),
        pytest.param("?", Graph.empty(0), id="empty"),
        pytest.param("C~", Graph.complete(4), id="K4"),
    ],
)
def test_known_strings(text: str, graph: Graph):
    assert parse_graph6(text) == graph
    assert serialize_graph6(graph) == text


@given(graphs(max_n=14))
def test_graph6_matches_networkx(g: Graph):
    expected = nx.to_graph6_bytes(to_networkx(g), header=False).strip()
    assert serialize_graph6(g).encode("ascii") == expected
    assert parse_graph6(expected) == g


def test_header_and_bytes_accepted():
    assert parse_graph6(b">>graph6<<Bw\n") == Graph.complete(3)


def test_extended_order_header():
    g = Graph.cycle(64)
    text = serialize_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@pytest.mark.parametrize(
    ("text", "position"),
    [
        pytest.param("B w", 1, id="illegal-character"),
        pytest.param("Bww", 2, id="too-long"),
        pytest.param("C", 1, id="truncated"),
        pytest.param("Bx", 1, id="padding-bits"),
    ],
)
def test_malformed_graph6(text: str, position: int):
    with pytest.raises(GraphFormatError) as e:
        parse_graph6(text)
    assert e.value.position == position


@pytest.mark.parametrize(
    ("data", "position"),
    [
        pytest.param(b"C\xff\n", 1, id="invalid-utf8"),
        pytest.param("C\u00e9\n".encode(), 1, id="utf8-non-ascii"),
    ],
)
def test_non_ascii_bytes(tmp_path, data: bytes, position: int):
    with pytest.raises(GraphFormatError) as e:
        parse_graph6(data)
    assert e.value.position == position
    path = tmp_path / "graphs.g6"
    path.write_bytes(data)
    with pytest.raises(GraphFormatError) as e:
        read_graphs(path)
    assert e.value.position == position


def test_order_guard():
    with pytest.raises(GuardViolation):
        parse_graph6("~?@@")


def test_edge_list():
    g = parse_edge_list("4 3\n0 1\n1 2  # middle\n2 3\n")
    assert g == Graph.path(4)
    assert serialize_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n"
    assert parse_edge_list(serialize_edge_list(Graph.empty(2))) == Graph.empty(2)


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("", id="empty"),
        pytest.param("3 2\n0 1\n", id="missing-edge"),
        pytest.param("3 1\n0 x\n", id="not-a-number"),
        pytest.param("3 1\n0 3\n", id="out-of-range"),
        pytest.param("3 1\n1 1\n", id="loop"),
    ],
)
def test_malformed_edge_list(text: str):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_detect_format():
    assert detect_format("# comment\n3 2\n0 1\n1 2\n") == "edgelist"
    assert detect_format("Bw\nC~\n") == "graph6"
    assert [g.n for g in parse_graphs("Bw\n\nC~\n")] == [3, 4]
    with pytest.raises(GraphFormatError):
        detect_format("\n# nothing\n")


def test_read_graphs(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\nBg\n", encoding="ascii")
    assert read_graphs(path) == [Graph.complete(3), Graph.path(3)]
    path.write_text("3 1\n0 2\n", encoding="ascii")
    assert read_graphs(path, "edgelist") == [Graph.from_edges(3, [(0, 2)])]
