from __future__ import annotations

from fractions import Fraction

from misbench.exception import PreconditionViolation, ProofClaimViolation
from misbench.graph import Graph, is_k4_free
from misbench.models.pipeline import CellView
from misbench.pipeline import (
    bad_event_probability,
    decompose,
    pipeline_corpus,
    run_pipeline,
    select,
    transversal_census,
)

from graphs import claw, diamond, subcubic_graphs
from hypothesis import assume, given, settings
import pytest


def test_diamond_decomposition():
    dec = decompose(diamond(), 0b0001)
    assert dec.I3 == 0b0001
    assert dec.ell == 1
    assert dec.edge_count_I0_J0 == 3
    assert [(c.u, c.x, c.y, c.z) for c in dec.cells] == [(0, 1, 2, 3)]
    assert all(check.holds for check in dec.inequalities())


def test_diamond_pipeline():
    report = run_pipeline(diamond())
    assert report.I0 == [0]
    assert report.ok
    assert report.census.exact
    assert (report.census.total, report.census.good_count) == (4, 2)
    assert report.census.p_good == "1/2"
    assert report.census.regime_matches
    (cell,) = report.cell_probabilities
    assert (cell.case_x, cell.case_y) == ("d0", "d0")
    assert (cell.q_x, cell.q_y, cell.bad) == ("1/4", "1/4", "1/2")
    assert cell.census_bad == "1/2"
    assert report.product.product_bound == "1/2"
    assert report.product.geometric_bound == "3/4"
    assert report.product.holds
    assert report.capture is not None
    assert report.capture.mis_k == 2
    assert [f.size for f in report.capture.families] == [2]


def test_two_diamonds():
    report = run_pipeline(Graph.union(diamond(), diamond()))
    assert report.sizes["cells"] == 2
    assert report.sizes["I6"] == 2
    assert report.census.p_good == "1/4"
    assert report.product.geometric_bound == "9/16"
    assert report.ok


def test_cycle_without_cells():
    report = run_pipeline(Graph.cycle(6), I0=0b010101)
    assert report.sizes["I3"] == 0
    assert report.cells == []
    assert report.census.p_good == "1"
    assert report.ok


def test_claw_labeling():
    dec = decompose(claw(), 0b0001)
    assert dec.cells[0].view(0) == CellView(index=0, u=0, x=1, y=2, z=3)
    paw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    cell = decompose(paw, 0b0001).cells[0]
    assert (cell.x, cell.y, cell.z) == (1, 3, 2)


def test_every_cell_in_s():
    report = run_pipeline(diamond(), S=[0])
    assert report.S == [0]
    assert report.sizes["I4"] == 0
    assert report.sizes["outside_U"] == 4
    assert report.census.p_good == "1"
    assert report.ok


def test_rejected_inputs():
    star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    with pytest.raises(PreconditionViolation):
        decompose(star, 0b00001)
    with pytest.raises(PreconditionViolation):
        decompose(Graph.complete(4), 0b0001)
    with pytest.raises(PreconditionViolation):
        decompose(Graph.path(4), 0b0001)
    dec = decompose(diamond(), 0b0001)
    with pytest.raises(PreconditionViolation):
        select(diamond(), dec, [5])
    state = select(diamond(), dec, [0])
    with pytest.raises(PreconditionViolation):
        bad_event_probability(diamond(), dec, state, 0, "x")


@pytest.mark.parametrize(
    "I0",
    [
        pytest.param(1 << 9, id="beyond-order"),
        pytest.param(0b010101 | 1 << 6, id="extra-vertex"),
        pytest.param(-1, id="negative"),
    ],
)
def test_I0_outside_vertex_range(I0: int):
    with pytest.raises(PreconditionViolation) as e:
        decompose(Graph.cycle(6), I0)
    assert e.value.witness == I0


def test_sampled_census():
    g = Graph.union(diamond(), diamond())
    dec = decompose(g, 0b00010001)
    state = select(g, dec)
    stats = transversal_census(g, dec, state, seed=3, max_space=4, samples=2000)
    assert not stats.exact
    assert stats.total == 2000
    assert stats.wilson is not None
    low, high = stats.wilson
    assert low <= stats.good_count / stats.total <= high
    again = transversal_census(g, dec, state, seed=3, max_space=4, samples=2000)
    assert again.good_count == stats.good_count


def test_sampled_report_skips_product_bound():
    g = Graph.union(diamond(), diamond())
    report = run_pipeline(g, max_space=4, samples=500, capture=False)
    assert not report.census.exact
    assert report.product.holds is None
    assert report.capture is None
    assert "census is sampled; product bound not asserted" in report.notes


def test_raise_for_violations():
    report = run_pipeline(diamond())
    report.raise_for_violations()
    broken = report.model_copy(update={"violations": ["capture"]})
    with pytest.raises(ProofClaimViolation):
        broken.raise_for_violations()


@settings(max_examples=100, deadline=None)
@given(subcubic_graphs(max_n=12))
def test_claims_hold_on_subcubic_graphs(g: Graph):
    assume(is_k4_free(g))
    report = run_pipeline(g)
    assert report.violations == []
    allowed = {Fraction(1, 4), Fraction(3, 16), Fraction(1, 8), Fraction(9, 64)}
    for cell in report.cell_probabilities:
        assert Fraction(cell.q_x) in allowed
        assert Fraction(cell.q_y) in allowed
        assert Fraction(cell.bad) >= Fraction(1, 4)


def test_small_corpus():
    report = pipeline_corpus(3, seed=0, min_n=8, max_n=12)
    assert len(report.instances) == 3
    assert report.ok
    assert pipeline_corpus(3, seed=0, min_n=8, max_n=12) == report


@pytest.mark.slow
def test_corpus():
    report = pipeline_corpus(100, seed=0, workers=2)
    assert report.violation_counts == {}
