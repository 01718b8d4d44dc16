"""Isomorphism-free generation of small graphs and exhaustive bound checks.

Classes are identified by a canonical graph6 key: the column-major adjacency
string minimized over every vertex order that respects a colour-refined
ordered partition. Generation extends each class of order ``n - 1`` by one
vertex with every neighborhood mask and keeps one graph per key.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import json
import math
from pathlib import Path
from typing import Literal, Optional, Union

from .bounds import corollary1, eppstein, nielsen
from .codec import parse_graph6, serialize_graph6
from .const import CANONICAL_MAX_ORDER, MATRIX_SCAN_MAX_ORDER
from .corpus import corpus_seeds, random_subcubic_k4free
from .exception import GuardViolation, PreconditionViolation
from .graph import (
    Graph,
    clique_components,
    components,
    degree_stats,
    is_k4_free,
)
from .log import log
from .mibs import enumerate_mibs_canonical
from .mis import mis_profile
from .models.extremal import (
    Degree2Report,
    Degree2Row,
    ExtremalReport,
    MibsScanReport,
    SearchReport,
    StoredRecord,
    TightnessReport,
    TightnessRow,
)
from .models.mis import SizeProfile
from .utils import fraction_str, iter_bits, pool_map, popcount

GraphFilter = Literal["none", "k4free", "maxdeg3", "both"]
BoundSelector = Literal["eppstein", "nielsen", "corollary1"]

FILTERS: tuple[GraphFilter, ...] = ("none", "k4free", "maxdeg3", "both")

DEGREE2_FACTORS = {
    "degree_one": Fraction(8, 9),
    "isolated": Fraction(16, 27),
    "long_cycle": Fraction(11, 12),
}


@dataclass(frozen=True)
class CanonicalGraph:
    """Representative of an isomorphism class, relabeled into canonical order."""

    graph: Graph
    key: str

    @classmethod
    def of(cls, g: Graph) -> "CanonicalGraph":
        key = canonical_key(g)
        return cls(parse_graph6(key), key)


def _check_filter(graph_filter: str) -> None:
    if graph_filter not in FILTERS:
        raise PreconditionViolation("unknown graph filter", graph_filter)


def _refine_colors(g: Graph) -> list[int]:
    """Colour refinement seeded by degree; colours are ranks of signatures."""
    colors = [popcount(row) for row in g.adj]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == len(set(colors)):
            return refined
        colors = refined


def _minimal_order(g: Graph, colors: Sequence[int]) -> tuple[int, ...]:
    """Vertex order with the smallest column sequence among colour-sorted ones.

    Column ``j`` holds the adjacency of position ``j`` to positions ``0..j-1``,
    the first position most significant, which is the graph6 bit order.
    """
    n = g.n
    slots = sorted(colors)
    best: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    order: list[int] = []
    columns: list[int] = []

    def search(used: int) -> None:
        j = len(order)
        if j == n:
            if not best or tuple(columns) < best[0][0]:
                best[:] = [(tuple(columns), tuple(order))]
            return
        for v in range(n):
            if used >> v & 1 or colors[v] != slots[j]:
                continue
            column = 0
            for u in order:
                column = column << 1 | (g.adj[v] >> u & 1)
            columns.append(column)
            if not best or tuple(columns) <= best[0][0][: j + 1]:
                order.append(v)
                search(used | 1 << v)
                order.pop()
            columns.pop()

    search(0)
    return best[0][1]


@lru_cache(maxsize=1 << 18)
def canonical_key(g: Graph) -> str:
    """graph6 of ``g`` in canonical order; equal keys iff isomorphic."""
    if g.n > CANONICAL_MAX_ORDER:
        raise GuardViolation("canonical order", CANONICAL_MAX_ORDER, g.n)
    if g.n == 0:
        return serialize_graph6(g)
    return serialize_graph6(g.relabel(_minimal_order(g, _refine_colors(g))))


def passes_filter(g: Graph, graph_filter: GraphFilter) -> bool:
    _check_filter(graph_filter)
    if graph_filter in ("maxdeg3", "both") and degree_stats(g).max_degree > 3:
        return False
    if graph_filter in ("k4free", "both") and not is_k4_free(g):
        return False
    return True


def _has_triangle(g: Graph, mask: int) -> bool:
    for u in iter_bits(mask):
        inside = g.adj[u] & mask
        for v in iter_bits(inside):
            if g.adj[v] & inside:
                return True
    return False


def _extension_allowed(g: Graph, mask: int, graph_filter: GraphFilter) -> bool:
    """Whether a new vertex joined to ``mask`` keeps ``g`` inside the filter."""
    if graph_filter in ("maxdeg3", "both"):
        if popcount(mask) > 3 or any(g.degree(v) >= 3 for v in iter_bits(mask)):
            return False
    if graph_filter in ("k4free", "both") and _has_triangle(g, mask):
        return False
    return True


def _augment(job: tuple[Graph, GraphFilter]) -> list[str]:
    g, graph_filter = job
    n = g.n
    children = set()
    for mask in range(1 << n):
        if not _extension_allowed(g, mask, graph_filter):
            continue
        rows = [row | (mask >> v & 1) << n for v, row in enumerate(g.adj)]
        rows.append(mask)
        child = Graph(n + 1, tuple(rows))
        children.add(canonical_key(child))
    return sorted(children)


_LEVELS: dict[tuple[int, str], tuple[CanonicalGraph, ...]] = {}


def generate_all(
    n: int, graph_filter: GraphFilter = "none", workers: int = 1
) -> list[CanonicalGraph]:
    """One canonical representative per isomorphism class of order ``n``.

    Every filter is hereditary, so augmenting the filtered classes of order
    ``n - 1`` reaches every filtered class of order ``n``. Levels are cached.
    """
    _check_filter(graph_filter)
    if n < 0:
        raise PreconditionViolation("order must be nonnegative", n)
    if n > CANONICAL_MAX_ORDER:
        raise GuardViolation("canonical order", CANONICAL_MAX_ORDER, n)
    cached = _LEVELS.get((n, graph_filter))
    if cached is not None:
        return list(cached)

    if n == 0:
        level: tuple[CanonicalGraph, ...] = (CanonicalGraph.of(Graph.empty(0)),)
    else:
        parents = generate_all(n - 1, graph_filter, workers)
        expanded = pool_map(
            _augment, [(p.graph, graph_filter) for p in parents], workers=workers
        )
        keys = sorted(set().union(*expanded))
        level = tuple(CanonicalGraph(parse_graph6(key), key) for key in keys)
    _LEVELS[(n, graph_filter)] = level
    log("DEBUG", f"n={n} filter={graph_filter}: <y>{len(level)}</y> classes")
    return list(level)


def generate_by_matrix_scan(
    n: int, graph_filter: GraphFilter = "none"
) -> list[CanonicalGraph]:
    """Canonicalize every labeled graph of order ``n``; independent of
    :func:`generate_all`."""
    _check_filter(graph_filter)
    if n > MATRIX_SCAN_MAX_ORDER:
        raise GuardViolation("matrix scan order", MATRIX_SCAN_MAX_ORDER, n)
    pairs = list(combinations(range(n), 2))
    keys = set()
    for chosen in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[i] for i in iter_bits(chosen)))
        if passes_filter(g, graph_filter):
            keys.add(canonical_key(g))
    return [CanonicalGraph(parse_graph6(key), key) for key in sorted(keys)]


def class_profiles(
    graphs: Sequence[CanonicalGraph], workers: int = 1
) -> list[SizeProfile]:
    return pool_map(mis_profile, [c.graph for c in graphs], workers=workers)


def is_clique_union(g: Graph, k: int) -> bool:
    """``g`` is a disjoint union of exactly ``k`` copies of K3 or K4."""
    sizes = clique_components(g)
    return sizes is not None and len(sizes) == k and all(s in (3, 4) for s in sizes)


def _slack_bucket(count: int, bound: Fraction) -> str:
    return f"{math.floor(Fraction(count) / bound * 10) / 10:.1f}"


def verify_theorem2(
    n: int,
    workers: int = 1,
    graphs: Optional[Sequence[CanonicalGraph]] = None,
    profiles: Optional[Sequence[SizeProfile]] = None,
) -> list[ExtremalReport]:
    """Compare mis_{<=k} with ``3^(4k-n) 4^(n-3k)`` on every class, for every k,
    and check that equality happens exactly on unions of k K3/K4 components."""
    graphs = generate_all(n, "none", workers) if graphs is None else graphs
    profiles = class_profiles(graphs, workers) if profiles is None else profiles
    reports = []
    for k in range(n + 1):
        bound = eppstein(n, k).exact
        assert bound is not None
        report = ExtremalReport(
            n=n, k=k, bound=fraction_str(bound), classes=len(graphs), max_count=0
        )
        for c, profile in zip(graphs, profiles):
            count = profile.at_most(k)
            report.max_count = max(report.max_count, count)
            bucket = _slack_bucket(count, bound)
            report.slack_histogram[bucket] = report.slack_histogram.get(bucket, 0) + 1
            if count > bound:
                report.violations.append(c.key)
            equal = count == bound
            if equal:
                report.attainers.append(c.key)
            if equal != is_clique_union(c.graph, k):
                report.mismatches.append(c.key)
        if not report.ok:
            log(
                "WARNING",
                f"n={n} k={k}: {len(report.violations)} violations, "
                f"{len(report.mismatches)} equality mismatches",
            )
        reports.append(report)
    log("SUCCESS", f"n={n}: checked {len(graphs)} classes for every k")
    return reports


def degree2_conditions(g: Graph) -> set[str]:
    """Which of the degree-one, isolated-vertex and long-cycle cases apply."""
    stats = degree_stats(g)
    found = set()
    if 1 in stats.degrees:
        found.add("degree_one")
    if 0 in stats.degrees:
        found.add("isolated")
    for comp in components(g):
        cycle = all(stats.degrees[v] == 2 for v in iter_bits(comp))
        if cycle and popcount(comp) >= 4:
            found.add("long_cycle")
    return found


def verify_degree2_constants(
    n: int,
    graphs: Optional[Sequence[CanonicalGraph]] = None,
    profiles: Optional[Sequence[SizeProfile]] = None,
) -> Degree2Report:
    """Scaled Eppstein bounds for max degree ``<= 2``: ``8/9`` with a degree-one
    vertex, ``16/27`` with an isolated vertex, ``11/12`` with a cycle of length
    at least 4."""
    graphs = generate_all(n, "maxdeg3") if graphs is None else graphs
    profiles = class_profiles(graphs) if profiles is None else profiles
    rows = {
        name: Degree2Row(condition=name, factor=fraction_str(factor), classes=0)
        for name, factor in DEGREE2_FACTORS.items()
    }
    bounds = [eppstein(n, k).exact for k in range(n + 1)]
    for c, profile in zip(graphs, profiles):
        if degree_stats(c.graph).max_degree > 2:
            continue
        for name in sorted(degree2_conditions(c.graph)):
            row = rows[name]
            row.classes += 1
            factor = DEGREE2_FACTORS[name]
            for k, bound in enumerate(bounds):
                assert bound is not None
                count = profile.at_most(k)
                if count > factor * bound:
                    row.violations.append(f"{c.key}@{k}")
                elif count == factor * bound:
                    row.tight.append(f"{c.key}@{k}")
    report = Degree2Report(n=n, rows=list(rows.values()))
    if not report.ok:
        log("WARNING", f"n={n}: a degree <= 2 factor is exceeded")
    return report


def _bound_value(selector: BoundSelector, n: int, k: int, eta: Optional[float]):
    if selector == "eppstein":
        return eppstein(n, k).value
    if selector == "nielsen":
        return nielsen(n, k).value
    assert eta is not None
    return corollary1(n, k, eta).value


def _scan_graphs(
    n: int, graph_filter: GraphFilter, count: int, seed: int, workers: int
) -> list[CanonicalGraph]:
    if n <= CANONICAL_MAX_ORDER:
        return generate_all(n, graph_filter, workers)
    log("INFO", f"n={n} exceeds the canonical order, sampling {count} instances")
    sampled = [random_subcubic_k4free(n, s) for s in corpus_seeds(count, seed)]
    return [CanonicalGraph(g, serialize_graph6(g)) for g in sampled]


def tightness_scan(
    n: int,
    graph_filter: GraphFilter = "both",
    bound: BoundSelector = "eppstein",
    eta: Optional[float] = None,
    graphs: Optional[Sequence[CanonicalGraph]] = None,
    count: int = 50,
    seed: int = 0,
    workers: int = 1,
) -> TightnessReport:
    """Largest count per k over a family, against one bound.

    ``eppstein`` is compared with mis_{<=k}, the others with mis_k. Orders
    above the canonical limit use the seeded subcubic K4-free corpus.
    """
    _check_filter(graph_filter)
    if bound == "corollary1" and eta is None:
        raise PreconditionViolation("corollary1 needs eta")
    if graphs is None:
        graphs = _scan_graphs(n, graph_filter, count, seed, workers)
    profiles = class_profiles(graphs, workers)
    rows = []
    for k in range(n + 1):
        counts = [
            p.at_most(k) if bound == "eppstein" else p.exactly(k) for p in profiles
        ]
        best = max(counts, default=0)
        value = _bound_value(bound, n, k, eta)
        rows.append(
            TightnessRow(
                k=k,
                max_count=best,
                attainer=graphs[counts.index(best)].key if counts else None,
                bound=value,
                ratio=best / value if math.isfinite(value) else 0.0,
            )
        )
    return TightnessReport(
        n=n, filter=graph_filter, bound=bound, eta=eta, classes=len(graphs), rows=rows
    )


def _mibs_count(g: Graph) -> int:
    return enumerate_mibs_canonical(g).distinct_count


def mibs_scan(
    n: int,
    graph_filter: GraphFilter = "k4free",
    graphs: Optional[Sequence[CanonicalGraph]] = None,
    workers: int = 1,
) -> MibsScanReport:
    graphs = generate_all(n, graph_filter, workers) if graphs is None else graphs
    counts = pool_map(_mibs_count, [c.graph for c in graphs], workers=workers)
    best = max(counts, default=0)
    return MibsScanReport(
        n=n,
        filter=graph_filter,
        classes=len(graphs),
        max_mibs=best,
        attainer=graphs[counts.index(best)].key if counts else None,
        reference_12=12 ** (n / 4),
        reference_6=6 ** (n / 4),
    )


class ResultStore:
    """Searched classes as newline-delimited JSON, one record per class."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def load(self) -> list[StoredRecord]:
        if not self.path.exists():
            return []
        with self.path.open(encoding="utf-8") as f:
            return [StoredRecord(**json.loads(line)) for line in f if line.strip()]

    def classes(self, n: int, graph_filter: str) -> list[StoredRecord]:
        return [r for r in self.load() if r.n == n and r.filter == graph_filter]

    def append(self, records: Iterable[StoredRecord]) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as f:
            for record in records:
                f.write(json.dumps(record.model_dump(), sort_keys=True) + "\n")


def _stored_records(
    n: int,
    graph_filter: str,
    graphs: Sequence[CanonicalGraph],
    profiles: Sequence[SizeProfile],
) -> list[StoredRecord]:
    bounds = [eppstein(n, k).exact for k in range(n + 1)]
    records = []
    for c, profile in zip(graphs, profiles):
        counts = [profile.at_most(k) for k in range(n + 1)]
        records.append(
            StoredRecord(
                key=c.key,
                n=n,
                filter=graph_filter,
                profile=profile.counts,
                tight_k=[k for k, b in enumerate(bounds) if counts[k] == b],
                violations=sum(
                    1 for k, b in enumerate(bounds) if b is not None and counts[k] > b
                ),
            )
        )
    return records


def search(
    n: int,
    graph_filter: GraphFilter = "none",
    workers: int = 1,
    store: Optional[ResultStore] = None,
    resume: bool = False,
    mibs: bool = False,
) -> SearchReport:
    """Exhaustive checks at one order, optionally persisted and resumable."""
    stored = store.classes(n, graph_filter) if store is not None and resume else []
    if stored:
        log("INFO", f"n={n}: resuming from {len(stored)} stored classes")
        graphs = [CanonicalGraph(parse_graph6(r.key), r.key) for r in stored]
        profiles = [SizeProfile(counts=r.profile) for r in stored]
    else:
        graphs = generate_all(n, graph_filter, workers)
        profiles = class_profiles(graphs, workers)
        if store is not None:
            store.append(_stored_records(n, graph_filter, graphs, profiles))
    return SearchReport(
        n=n,
        filter=graph_filter,
        classes=len(graphs),
        resumed=bool(stored),
        theorem2=verify_theorem2(n, workers, graphs, profiles),
        degree2=verify_degree2_constants(n, graphs, profiles),
        mibs=mibs_scan(n, graph_filter, graphs, workers) if mibs else None,
    )
