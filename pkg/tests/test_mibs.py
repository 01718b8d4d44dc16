from __future__ import annotations

from misbench.corpus import random_graph
from misbench.exception import GuardViolation, PreconditionViolation
from misbench.graph import Graph
from misbench.mibs import (
    enumerate_mibs_bruteforce,
    enumerate_mibs_canonical,
    is_maximal_bipartite,
    mibs_component_identity_check,
)
from misbench.utils import popcount

from graphs import graphs
from hypothesis import given, settings
import pytest


def test_k4_edges():
    census = enumerate_mibs_canonical(Graph.complete(4))
    assert census.distinct_count == 6
    assert census.ordered_pair_count == 12
    assert sorted(census.vertex_sets) == sorted(
        (1 << u) | (1 << v) for u, v in Graph.complete(4).edges()
    )
    assert census.records_without_witness == 0
    assert all(len(r.witnesses) == 1 for r in census.records)
    assert enumerate_mibs_bruteforce(Graph.complete(4)).vertex_sets == (
        census.vertex_sets
    )


def test_small_examples():
    k3 = enumerate_mibs_canonical(Graph.complete(3))
    assert (k3.distinct_count, k3.ordered_pair_count) == (3, 6)
    c5 = enumerate_mibs_bruteforce(Graph.cycle(5))
    assert c5.distinct_count == 5
    assert all(popcount(mask) == 4 for mask in c5.vertex_sets)
    path = enumerate_mibs_canonical(Graph.path(5))
    assert path.vertex_sets == [0b11111]


def test_disjoint_k4s():
    assert enumerate_mibs_canonical(
        Graph.union(Graph.complete(4), Graph.complete(4))
    ).distinct_count == 36


def test_witnesses_are_canonical():
    g = Graph.union(Graph.complete(3), Graph.cycle(5))
    for record in enumerate_mibs_canonical(g).records:
        for a, b in record.witnesses:
            assert a | b == record.vertices
            assert not a & b
            assert popcount(a) >= popcount(b)
            if popcount(a) == popcount(b):
                assert a < b


def test_envelope_holds():
    census = enumerate_mibs_canonical(Graph.union(Graph.complete(4), Graph.cycle(5)))
    assert census.envelope
    assert all(row.holds for row in census.envelope)


@pytest.mark.parametrize(
    ("g", "rest"),
    [
        pytest.param(Graph.complete(4), 1, id="K4"),
        pytest.param(Graph.union(Graph.complete(4), Graph.complete(3)), 3, id="K4+K3"),
        pytest.param(Graph.union(Graph.complete(4), Graph.complete(4)), 6, id="2K4"),
    ],
)
def test_component_identity(g: Graph, rest: int):
    report = mibs_component_identity_check(g)
    assert report.mibs_rest == rest
    assert report.mibs == 6 * rest
    assert report.identity_holds
    assert report.every_record_meets_twice


def test_component_identity_needs_k4():
    with pytest.raises(PreconditionViolation):
        mibs_component_identity_check(Graph.cycle(5))


def test_bruteforce_guard():
    with pytest.raises(GuardViolation):
        enumerate_mibs_bruteforce(Graph.empty(21))


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_canonical_matches_bruteforce(g: Graph):
    oracle = enumerate_mibs_bruteforce(g)
    census = enumerate_mibs_canonical(g)
    assert census.vertex_sets == oracle.vertex_sets
    assert census.ordered_pair_count >= census.distinct_count
    assert all(is_maximal_bipartite(g, mask) for mask in census.vertex_sets)


def test_workers_do_not_change_the_census():
    g = Graph.union(Graph.cycle(5), Graph.complete(3))
    assert enumerate_mibs_canonical(g, workers=2) == enumerate_mibs_canonical(g)


@pytest.mark.slow
def test_canonical_matches_bruteforce_on_seeded_graphs():
    for seed in range(500):
        n = 4 + seed % 9
        g = random_graph(n, 0.25 + (seed % 4) / 10, seed)
        assert (
            enumerate_mibs_canonical(g).vertex_sets
            == enumerate_mibs_bruteforce(g).vertex_sets
        ), seed
