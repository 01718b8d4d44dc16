"""Cell decomposition of a K4-free subcubic graph around a maximal independent set,
and the transversal census bounding the maximal independent sets of size ``k``.

Given ``I0`` of size ``k``, every vertex ``u`` of ``I0`` with three private
neighbors spans a cell ``N[u] = {u, x, y, z}`` with ``x, y`` non-adjacent. For a
set ``S`` of cells met at least twice, the remaining cells partition ``U``; a
maximal independent set meets each of them in exactly one vertex, and the
resulting transversal is good. Cells far apart in the cell graph are bad
independently with probability at least 1/4, which caps the number of good
transversals.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
import math
import random
from typing import Literal, NamedTuple, Optional

from .const import (
    CENSUS_MAX_SPACE,
    MAX_CELL_DEGREE,
    MONTE_CARLO_SAMPLES,
    SQUARE_PACKING_RATIO,
)
from .corpus import corpus_seeds, instance_from_seed
from .exception import GuardViolation, PreconditionViolation, ProofClaimViolation
from .graph import (
    Graph,
    VertexSet,
    degree_stats,
    is_maximal_independent,
    k4_witness,
)
from .log import log
from .mis import enumerate_mis, minimum_maximal_independent_set
from .models.pipeline import (
    CaptureReport,
    CellProbability,
    CellView,
    CensusReport,
    CorpusReport,
    FamilyCheck,
    InequalityCheck,
    InstanceSummary,
    PipelineReport,
    ProductBoundReport,
)
from .utils import (
    bits_to_list,
    fraction_str,
    iter_bits,
    list_to_bits,
    pool_map,
    popcount,
)

Side = Literal["x", "y"]

QUARTER = Fraction(1, 4)
WILSON_Z = 1.959963984540054

D1_NOTE = (
    "d1 case: v is picked with probability 1/4 and the single outside neighbor "
    "of v' is missed with probability 3/4, so q = 3/16"
)


@dataclass(frozen=True)
class Cell:
    u: int
    x: int
    y: int
    z: int

    @property
    def vertices(self) -> VertexSet:
        return 1 << self.u | 1 << self.x | 1 << self.y | 1 << self.z

    def other(self, side: Side) -> int:
        """The vertex ``v'`` of ``{x, y}`` not on ``side``."""
        return self.y if side == "x" else self.x

    def pick(self, side: Side) -> int:
        return self.x if side == "x" else self.y

    def view(self, index: int) -> CellView:
        return CellView(index=index, u=self.u, x=self.x, y=self.y, z=self.z)


def _check(
    name: str, lhs: int, relation: str, rhs: int, asserted: bool = True
) -> InequalityCheck:
    if relation == "<=":
        holds = lhs <= rhs
    elif relation == ">=":
        holds = lhs >= rhs
    else:
        holds = lhs == rhs
    return InequalityCheck(
        name=name, lhs=lhs, relation=relation, rhs=rhs, holds=holds, asserted=asserted
    )


@dataclass(frozen=True)
class Decomposition:
    n: int
    k: int
    I0: VertexSet
    J0: VertexSet
    I1: VertexSet
    """``I0`` vertices with at most two neighbors in ``J0``"""
    J1: VertexSet
    """``J0`` vertices with a neighbor in ``I1``"""
    J2: VertexSet
    """``J0 - J1`` vertices with at least two neighbors in ``I0``"""
    I2: VertexSet
    """``I0`` vertices with a neighbor in ``J2``"""
    I3: VertexSet
    I3_shared: VertexSet
    """``I3`` vertices with a neighbor that has another ``I0`` neighbor"""
    edge_count_I0_J0: int
    cells: tuple[Cell, ...] = ()

    @property
    def ell(self) -> int:
        return popcount(self.I3)

    def inequalities(self) -> list[InequalityCheck]:
        i1, j1, j2, i2 = (popcount(s) for s in (self.I1, self.J1, self.J2, self.I2))
        excess = 4 * self.k - self.n
        return [
            _check(
                "edge_count_lower", self.n - self.k + j2, "<=", self.edge_count_I0_J0
            ),
            _check("edge_count_upper", self.edge_count_I0_J0, "<=", 3 * self.k - i1),
            _check("i1_plus_j2", i1 + j2, "<=", excess),
            _check("j1_size", j1, "<=", 2 * i1),
            _check("i2_size", i2, "<=", 3 * j2),
            _check("i1_i2_disjoint", popcount(self.I1 & self.I2), "==", 0),
            _check("j1_plus_j2", j1 + j2, "<=", 2 * excess),
            _check("i3_size", self.ell, ">=", self.k - i1 - 3 * j2),
        ]


def decompose(g: Graph, I0: VertexSet) -> Decomposition:
    """Split ``V`` around the maximal independent set ``I0`` and label the cells."""
    stats = degree_stats(g)
    if stats.max_degree > 3:
        vertex = next(v for v, d in enumerate(stats.degrees) if d > 3)
        raise PreconditionViolation("maximum degree exceeds 3 at vertex", vertex)
    clique = k4_witness(g)
    if clique is not None:
        raise PreconditionViolation("graph contains a K4", clique)
    if I0 < 0 or I0 & ~g.full:
        raise PreconditionViolation(f"I0 has vertices outside 0..{g.n - 1}", I0)
    if not is_maximal_independent(g, I0):
        raise PreconditionViolation(
            "I0 is not a maximal independent set", bits_to_list(I0)
        )
    adj = g.adj
    J0 = g.full & ~I0
    I1 = list_to_bits([v for v in iter_bits(I0) if popcount(adj[v] & J0) <= 2])
    J1 = list_to_bits([v for v in iter_bits(J0) if adj[v] & I1])
    J2 = list_to_bits(
        [v for v in iter_bits(J0 & ~J1) if popcount(adj[v] & I0) >= 2]
    )
    I2 = list_to_bits([v for v in iter_bits(I0) if adj[v] & J2])
    I3 = I0 & ~(I1 | I2)
    shared = list_to_bits(
        [
            u
            for u in iter_bits(I3)
            if any(popcount(adj[w] & I0) >= 2 for w in iter_bits(adj[u]))
        ]
    )
    dec = Decomposition(
        n=g.n,
        k=popcount(I0),
        I0=I0,
        J0=J0,
        I1=I1,
        J1=J1,
        J2=J2,
        I2=I2,
        I3=I3,
        I3_shared=shared,
        edge_count_I0_J0=sum(popcount(adj[v] & J0) for v in iter_bits(I0)),
    )
    return replace(dec, cells=tuple(label_cells(g, dec)))


def label_cells(g: Graph, dec: Decomposition) -> list[Cell]:
    """One cell per unshared ``I3`` vertex; ``(x, y)`` is the lexicographically
    first non-adjacent pair of its neighbors."""
    cells = []
    for u in iter_bits(dec.I3 & ~dec.I3_shared):
        a, b, c = iter_bits(g.adj[u])
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            if not g.has_edge(x, y):
                cells.append(Cell(u, x, y, z))
                break
        else:
            raise ProofClaimViolation("cell_labeling", f"N[{u}] induces a K4")
    return cells


@dataclass(frozen=True)
class SelectionState:
    S: frozenset[int]
    I4: tuple[int, ...]
    I5: tuple[int, ...]
    """``I4`` cells whose ``x`` and ``y`` have no neighbor outside ``U``"""
    I6: tuple[int, ...]
    U: VertexSet
    H: Graph
    """Cell graph on ``I5``, vertex ``p`` is cell ``I5[p]``"""
    neighbors: dict[int, frozenset[int]] = field(default_factory=dict)
    """Cell graph on all ``I4`` cells"""
    owner: dict[int, int] = field(default_factory=dict)
    """Cell index of every vertex of ``U``"""

    @property
    def cell_graph_max_degree(self) -> int:
        return max((len(v) for v in self.neighbors.values()), default=0)

    def ball(self, index: int, radius: int = 2) -> set[int]:
        seen = {index}
        frontier = {index}
        for _ in range(radius):
            frontier = {j for i in frontier for j in self.neighbors[i]} - seen
            seen |= frontier
        return seen


def select(g: Graph, dec: Decomposition, S: Iterable[int] = ()) -> SelectionState:
    """Restrict to the cells outside ``S`` and pick ``I6`` greedily.

    ``I6`` takes the lowest remaining ``I5`` cell and discards every cell within
    distance two of it in the cell graph, so chosen cells depend on disjoint
    sets of cells.
    """
    chosen = frozenset(S)
    outside = sorted(i for i in chosen if not 0 <= i < len(dec.cells))
    if outside:
        raise PreconditionViolation("S names cells that do not exist", outside)
    I4 = tuple(i for i in range(len(dec.cells)) if i not in chosen)
    owner = {v: i for i in I4 for v in iter_bits(dec.cells[i].vertices)}
    U = list_to_bits(list(owner))

    neighbors = {}
    for i in I4:
        cell = dec.cells[i]
        reach = 0
        for v in iter_bits(cell.vertices):
            reach |= g.adj[v]
        neighbors[i] = frozenset(
            owner[w] for w in iter_bits(reach & U & ~cell.vertices)
        )

    I5 = tuple(
        i
        for i in I4
        if not (g.adj[dec.cells[i].x] | g.adj[dec.cells[i].y]) & ~U
    )
    position = {i: p for p, i in enumerate(I5)}
    H = Graph(
        len(I5),
        tuple(
            list_to_bits([position[j] for j in neighbors[i] if j in position])
            for i in I5
        ),
    )

    state = SelectionState(chosen, I4, I5, (), U, H, neighbors, owner)
    remaining = set(I5)
    I6 = []
    while remaining:
        pick = min(remaining)
        I6.append(pick)
        remaining -= state.ball(pick)
    return replace(state, I6=tuple(I6))


def selection_checks(
    g: Graph, dec: Decomposition, state: SelectionState
) -> list[InequalityCheck]:
    s, cells = len(state.S), len(dec.cells)
    i4, i5, i6 = len(state.I4), len(state.I5), len(state.I6)
    close_pairs = sum(
        1
        for a, i in enumerate(state.I6)
        for j in state.I6[a + 1 :]
        if j in state.ball(i)
    )
    return [
        _check("s_size", s, "<=", dec.k - cells, asserted=False),
        _check("i4_size", i4, "==", cells - s),
        _check(
            "i5_size",
            i5,
            ">=",
            i4 - 6 * s - 2 * popcount(dec.J1) - popcount(dec.J2),
            asserted=False,
        ),
        _check("i6_size", i6, ">=", -(-i5 // SQUARE_PACKING_RATIO)),
        _check("cell_graph_degree", state.cell_graph_max_degree, "<=", MAX_CELL_DEGREE),
        _check("i6_square_independent", close_pairs, "==", 0),
        _check("outside_u", g.n - popcount(state.U), "==", g.n - 4 * i4),
    ]


def _outside_neighbors(g: Graph, cell: Cell, side: Side) -> VertexSet:
    return g.adj[cell.other(side)] & ~cell.vertices


def event_case(
    g: Graph, dec: Decomposition, state: SelectionState, index: int, side: Side
) -> str:
    outside = _outside_neighbors(g, dec.cells[index], side)
    d = popcount(outside)
    if d <= 1:
        return f"d{d}"
    owners = {state.owner[w] for w in iter_bits(outside)}
    return "d2_same" if len(owners) == 1 else "d2_distinct"


def bad_event_probability(
    g: Graph, dec: Decomposition, state: SelectionState, index: int, side: Side
) -> Fraction:
    """Probability that a uniform transversal picks ``v`` on ``side`` of cell
    ``index`` and misses every neighbor of the other vertex ``v'``."""
    if index not in state.I5:
        raise PreconditionViolation("cell is not in I5", index)
    per_cell: dict[int, int] = defaultdict(int)
    for w in iter_bits(_outside_neighbors(g, dec.cells[index], side)):
        per_cell[state.owner[w]] += 1
    q = QUARTER
    for hits in per_cell.values():
        q *= Fraction(4 - hits, 4)
    return q


class _Rule(NamedTuple):
    need: VertexSet
    """Neighbors of ``v'`` outside the cell"""
    escape: bool
    """``v'`` has a neighbor outside ``U``"""


@dataclass(frozen=True)
class TransversalStats:
    exact: bool
    total: int
    good_count: int
    strict_good_count: int
    bad_counts: tuple[int, ...] = ()
    """Per ``I5`` cell, transversals with a bad event there; exact runs only"""
    wilson: Optional[tuple[float, float]] = None

    @property
    def p_good(self) -> Fraction:
        return Fraction(self.good_count, self.total)


def _wilson(successes: int, trials: int) -> tuple[float, float]:
    p = successes / trials
    z2 = WILSON_Z**2
    center = (p + z2 / (2 * trials)) / (1 + z2 / trials)
    half = (
        WILSON_Z
        * math.sqrt(p * (1 - p) / trials + z2 / (4 * trials**2))
        / (1 + z2 / trials)
    )
    return max(0.0, center - half), min(1.0, center + half)


def transversal_census(
    g: Graph,
    dec: Decomposition,
    state: SelectionState,
    seed: int = 0,
    max_space: int = CENSUS_MAX_SPACE,
    samples: int = MONTE_CARLO_SAMPLES,
    allow_sampling: bool = True,
) -> TransversalStats:
    """Count good transversals of the cells in ``I4``.

    A transversal picking ``v`` in ``{x, y}`` of a cell is good there when it
    also contains a neighbor of ``v'``, or ``v'`` has a neighbor outside ``U``.
    The strict count ignores the second alternative. When ``4^|I4|`` exceeds
    ``max_space`` a seeded sample is drawn instead.
    """
    cells = [dec.cells[i] for i in state.I4]
    options = [(c.u, c.x, c.y, c.z) for c in cells]
    rules = [
        {
            c.pick(side): _Rule(
                _outside_neighbors(g, c, side),
                bool(g.adj[c.other(side)] & ~state.U),
            )
            for side in ("x", "y")
        }
        for c in cells
    ]
    tracked = {p: k for k, p in enumerate(state.I4.index(i) for i in state.I5)}
    bad_counts = [0] * len(state.I5)

    def evaluate(combo: tuple[int, ...]) -> tuple[bool, bool]:
        t = 0
        for v in combo:
            t |= 1 << v
        good = strict = True
        for position, (rule, v) in enumerate(zip(rules, combo)):
            entry = rule.get(v)
            if entry is None or entry.need & t:
                continue
            strict = False
            if position in tracked:
                bad_counts[tracked[position]] += 1
            if not entry.escape:
                good = False
        return good, strict

    space = 4 ** len(cells)
    if space <= max_space:
        good = strict = 0
        for combo in product(*options):
            is_good, is_strict = evaluate(combo)
            good += is_good
            strict += is_strict
        return TransversalStats(True, space, good, strict, tuple(bad_counts))

    if not allow_sampling:
        raise GuardViolation("transversal space", max_space, space)
    log(
        "WARNING",
        f"4^{len(cells)} transversals exceed {max_space}, sampling {samples}",
    )
    rng = random.Random(seed)
    good = strict = 0
    for _ in range(samples):
        is_good, is_strict = evaluate(tuple(rng.choice(o) for o in options))
        good += is_good
        strict += is_strict
    return TransversalStats(False, samples, good, strict, wilson=_wilson(good, samples))


def independent_regime_product(
    g: Graph, dec: Decomposition, state: SelectionState
) -> Optional[Fraction]:
    """Probability of a good transversal when no two cells are adjacent,
    computed cell by cell; ``None`` outside that regime."""
    if any(state.neighbors.values()):
        return None
    result = Fraction(1)
    for i in state.I4:
        cell = dec.cells[i]
        trapped = sum(
            1 for side in ("x", "y") if not g.adj[cell.other(side)] & ~state.U
        )
        result *= 1 - Fraction(trapped, 4)
    return result


def census_report(
    g: Graph, dec: Decomposition, state: SelectionState, stats: TransversalStats
) -> CensusReport:
    if not stats.exact:
        assert stats.wilson is not None
        return CensusReport(
            exact=False,
            total=stats.total,
            good_count=stats.good_count,
            strict_good_count=stats.strict_good_count,
            p_good=repr(stats.good_count / stats.total),
            wilson_low=stats.wilson[0],
            wilson_high=stats.wilson[1],
        )
    regime = independent_regime_product(g, dec, state)
    return CensusReport(
        exact=True,
        total=stats.total,
        good_count=stats.good_count,
        strict_good_count=stats.strict_good_count,
        p_good=fraction_str(stats.p_good),
        independent_regime=regime is not None,
        regime_product=None if regime is None else fraction_str(regime),
        regime_matches=None if regime is None else regime == stats.p_good,
    )


def cell_probabilities(
    g: Graph, dec: Decomposition, state: SelectionState, stats: TransversalStats
) -> list[CellProbability]:
    out = []
    for k, i in enumerate(state.I5):
        q_x = bad_event_probability(g, dec, state, i, "x")
        q_y = bad_event_probability(g, dec, state, i, "y")
        bad = q_x + q_y
        census = Fraction(stats.bad_counts[k], stats.total) if stats.exact else None
        out.append(
            CellProbability(
                index=i,
                case_x=event_case(g, dec, state, i, "x"),
                case_y=event_case(g, dec, state, i, "y"),
                q_x=fraction_str(q_x),
                q_y=fraction_str(q_y),
                bad=fraction_str(bad),
                census_bad=None if census is None else fraction_str(census),
                holds=bad >= QUARTER and (census is None or census == bad),
            )
        )
    return out


def _dependencies(
    g: Graph, dec: Decomposition, state: SelectionState, index: int
) -> set[int]:
    cell = dec.cells[index]
    reach = (g.adj[cell.x] | g.adj[cell.y]) & ~cell.vertices
    return {index} | {state.owner[w] for w in iter_bits(reach)}


def verify_product_bound(
    g: Graph, dec: Decomposition, state: SelectionState, stats: TransversalStats
) -> ProductBoundReport:
    """``p_good <= prod_{I6} (1 - P(B_i)) <= (3/4)^|I6|`` with disjoint dependencies."""
    bound = Fraction(1)
    for i in state.I6:
        bound *= 1 - (
            bad_event_probability(g, dec, state, i, "x")
            + bad_event_probability(g, dec, state, i, "y")
        )
    geometric = Fraction(3, 4) ** len(state.I6)

    dependencies = [_dependencies(g, dec, state, i) for i in state.I6]
    union: set[int] = set()
    disjoint = True
    for dep in dependencies:
        disjoint &= union.isdisjoint(dep)
        union |= dep

    def closed(v: int) -> VertexSet:
        return g.adj[v] | 1 << v

    apart = all(
        not closed(v) & closed(w)
        for a, i in enumerate(state.I6)
        for j in state.I6[a + 1 :]
        for v in (dec.cells[i].x, dec.cells[i].y)
        for w in (dec.cells[j].x, dec.cells[j].y)
    )
    return ProductBoundReport(
        p_good=fraction_str(stats.p_good)
        if stats.exact
        else repr(stats.good_count / stats.total),
        product_bound=fraction_str(bound),
        geometric_bound=fraction_str(geometric),
        holds=stats.p_good <= bound <= geometric if stats.exact else None,
        dependencies_disjoint=disjoint,
        neighborhoods_disjoint=apart,
    )


def _is_good_transversal(
    g: Graph, dec: Decomposition, state: SelectionState, t: VertexSet, strict: bool
) -> bool:
    for i in state.I4:
        cell = dec.cells[i]
        hit = t & cell.vertices
        if popcount(hit) != 1:
            return False
        for side in ("x", "y"):
            if hit != 1 << cell.pick(side):
                continue
            other = g.adj[cell.other(side)]
            if not other & t and (strict or not other & ~state.U):
                return False
    return True


def verify_IS_capture(
    g: Graph,
    dec: Decomposition,
    k: Optional[int] = None,
    seed: int = 0,
    max_space: int = CENSUS_MAX_SPACE,
) -> CaptureReport:
    """Group the maximal independent sets of size ``k`` by the cells they meet
    twice and check each group against its good-transversal count."""
    k = dec.k if k is None else k
    family = enumerate_mis(g).of_size(k)
    groups: dict[frozenset[int], list[int]] = defaultdict(list)
    hit_all: dict[frozenset[int], bool] = defaultdict(lambda: True)
    for mis in family:
        meets = [popcount(mis & c.vertices) for c in dec.cells]
        key = frozenset(i for i, m in enumerate(meets) if m >= 2)
        groups[key].append(mis)
        hit_all[key] &= all(m >= 1 for m in meets)

    families = []
    for key in sorted(groups, key=lambda s: (len(s), sorted(s))):
        members = groups[key]
        state = select(g, dec, key)
        good_count = None
        if 4 ** len(state.I4) <= max_space:
            good_count = transversal_census(g, dec, state, seed, max_space).good_count
        outside = g.n - popcount(state.U)
        families.append(
            FamilyCheck(
                S=sorted(key),
                size=len(members),
                every_cell_hit=hit_all[key],
                size_ok=k >= len(dec.cells) + len(key),
                transversal_good=all(
                    _is_good_transversal(g, dec, state, m & state.U, strict=False)
                    for m in members
                ),
                strict_transversal_good=all(
                    _is_good_transversal(g, dec, state, m & state.U, strict=True)
                    for m in members
                ),
                good_count=good_count,
                outside=outside,
                capture_ok=None
                if good_count is None
                else len(members) <= good_count * 2**outside,
            )
        )
    return CaptureReport(k=k, mis_k=len(family), families=families)


def run_pipeline(
    g: Graph,
    I0: Optional[VertexSet] = None,
    S: Iterable[int] = (),
    seed: int = 0,
    capture: bool = True,
    max_space: int = CENSUS_MAX_SPACE,
    samples: int = MONTE_CARLO_SAMPLES,
) -> PipelineReport:
    """Decompose, select, count transversals and check every claim on the way.

    ``I0`` defaults to the lexicographically first minimum maximal independent
    set and ``S`` to the empty set.
    """
    if I0 is None:
        I0 = minimum_maximal_independent_set(g)
    dec = decompose(g, I0)
    state = select(g, dec, S)
    stats = transversal_census(g, dec, state, seed, max_space, samples)
    census = census_report(g, dec, state, stats)
    probabilities = cell_probabilities(g, dec, state, stats)
    product_report = verify_product_bound(g, dec, state, stats)
    inequalities = dec.inequalities() + selection_checks(g, dec, state)

    notes = [D1_NOTE]
    if dec.I3_shared:
        notes.append(
            f"{popcount(dec.I3_shared)} vertices of I3 share a neighbor with "
            "another I0 vertex and span no cell"
        )
    if not stats.exact:
        notes.append("census is sampled; product bound not asserted")

    violations = [c.name for c in inequalities if c.asserted and not c.holds]
    violations += [f"cell_probability[{p.index}]" for p in probabilities if not p.holds]
    if product_report.holds is False:
        violations.append("product_bound")
    if not product_report.dependencies_disjoint:
        violations.append("dependencies_disjoint")
    if not product_report.neighborhoods_disjoint:
        violations.append("neighborhoods_disjoint")
    if census.regime_matches is False:
        violations.append("independent_regime")

    capture_report = None
    if capture:
        capture_report = verify_IS_capture(g, dec, seed=seed, max_space=max_space)
        if not capture_report.holds:
            violations.append("capture")

    report = PipelineReport(
        n=g.n,
        k=dec.k,
        I0=bits_to_list(I0),
        S=sorted(state.S),
        sizes={
            "I0": dec.k,
            "J0": popcount(dec.J0),
            "I1": popcount(dec.I1),
            "J1": popcount(dec.J1),
            "J2": popcount(dec.J2),
            "I2": popcount(dec.I2),
            "I3": dec.ell,
            "I3_shared": popcount(dec.I3_shared),
            "cells": len(dec.cells),
            "I4": len(state.I4),
            "I5": len(state.I5),
            "I6": len(state.I6),
            "U": popcount(state.U),
            "outside_U": g.n - popcount(state.U),
        },
        cells=[c.view(i) for i, c in enumerate(dec.cells)],
        edge_count_I0_J0=dec.edge_count_I0_J0,
        h_max_degree=state.cell_graph_max_degree,
        inequalities=inequalities,
        cell_probabilities=probabilities,
        census=census,
        product=product_report,
        capture=capture_report,
        notes=notes,
        violations=violations,
    )
    if violations:
        log("WARNING", f"n={g.n}: failed checks {', '.join(violations)}")
    return report


def _run_instance(job: tuple[int, int, int]) -> InstanceSummary:
    seed, min_n, max_n = job
    instance = instance_from_seed(seed, min_n, max_n)
    report = run_pipeline(instance.graph, seed=seed)
    return InstanceSummary(
        seed=seed,
        n=report.n,
        k=report.k,
        cells=report.sizes["cells"],
        I6=report.sizes["I6"],
        good_count=report.census.good_count,
        total=report.census.total,
        violations=report.violations,
    )


def pipeline_corpus(
    count: int, seed: int = 0, min_n: int = 8, max_n: int = 20, workers: int = 1
) -> CorpusReport:
    """Run :func:`run_pipeline` over the seeded K4-free subcubic corpus."""
    jobs = [(s, min_n, max_n) for s in corpus_seeds(count, seed)]
    summaries = pool_map(_run_instance, jobs, workers=workers)
    counts: dict[str, int] = defaultdict(int)
    for summary in summaries:
        for name in summary.violations:
            counts[name] += 1
    if counts:
        log("WARNING", f"corpus {seed}: violations {dict(counts)}")
    else:
        log("SUCCESS", f"corpus {seed}: {len(summaries)} instances passed")
    return CorpusReport(seed=seed, instances=summaries, violation_counts=dict(counts))
