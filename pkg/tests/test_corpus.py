from __future__ import annotations

from misbench.corpus import (
    corpus_seeds,
    from_networkx,
    instance_from_seed,
    random_graph,
    random_subcubic_k4free,
    subcubic_corpus,
    to_networkx,
)
from misbench.exception import PreconditionViolation
from misbench.graph import degree_stats, is_k4_free

from graphs import graphs
from hypothesis import given
import networkx as nx
import pytest


@pytest.mark.parametrize("seed", range(10))
def test_subcubic_k4free(seed: int):
    g = random_subcubic_k4free(12, seed)
    assert g.n == 12
    assert is_k4_free(g)
    assert degree_stats(g).max_degree <= 3
    assert random_subcubic_k4free(12, seed) == g


@pytest.mark.parametrize("n", [3, 7, 2])
def test_subcubic_order(n: int):
    with pytest.raises(PreconditionViolation):
        random_subcubic_k4free(n, 0)


def test_corpus_is_deterministic():
    assert corpus_seeds(5, 1) == corpus_seeds(5, 1)
    assert corpus_seeds(5, 1) != corpus_seeds(5, 2)
    corpus = subcubic_corpus(4, 7)
    assert corpus == subcubic_corpus(4, 7)
    for instance in corpus:
        assert instance == instance_from_seed(instance.seed)
        assert 8 <= instance.graph.n <= 20
        assert instance.graph.n % 2 == 0


def test_random_graph_is_seeded():
    assert random_graph(9, 0.4, 5) == random_graph(9, 0.4, 5)
    assert random_graph(6, 1.0, 0) == from_networkx(nx.complete_graph(6))


@given(graphs(max_n=10))
def test_networkx_roundtrip(g):
    nxg = to_networkx(g)
    assert nxg.number_of_nodes() == g.n
    assert nxg.number_of_edges() == g.edge_count
    assert from_networkx(nxg) == g


def test_failed_edge_swaps_are_logged(monkeypatch, caplog):
    def fail(*args, **kwargs):
        raise nx.NetworkXAlgorithmError("Maximum number of swap attempts")

    monkeypatch.setattr(nx, "double_edge_swap", fail)
    g = random_subcubic_k4free(12, 0)
    assert is_k4_free(g)
    assert "edge swaps stopped early" in caplog.text
