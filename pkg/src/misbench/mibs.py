from __future__ import annotations

from collections import defaultdict

from .const import BRUTE_FORCE_MAX_ORDER
from .exception import GuardViolation, PreconditionViolation
from .graph import Graph, components, induced, is_bipartite, is_clique
from .log import log
from .mis import enumerate_mis
from .models.mibs import (
    ComponentIdentityReport,
    EnvelopeRow,
    MibsCensus,
    MibsRecord,
)
from .utils import iter_bits, pool_map, popcount


def is_maximal_bipartite(g: Graph, mask: int) -> bool:
    """``g[mask]`` is bipartite and adding any outside vertex breaks that."""
    if not is_bipartite(g, mask):
        return False
    return all(
        not is_bipartite(g, mask | 1 << w) for w in iter_bits(g.full & ~mask)
    )


def enumerate_mibs_bruteforce(g: Graph) -> MibsCensus:
    if g.n > BRUTE_FORCE_MAX_ORDER:
        raise GuardViolation("brute-force order", BRUTE_FORCE_MAX_ORDER, g.n)
    records = [
        MibsRecord(vertices=mask)
        for mask in range(1 << g.n)
        if is_maximal_bipartite(g, mask)
    ]
    return MibsCensus(n=g.n, records=records, distinct_count=len(records))


def _complement_pairs(job: tuple[Graph, int]) -> list[tuple[int, bool]]:
    """Every ``B`` in MIS(G - A), with whether ``A + B`` is maximal bipartite."""
    g, a = job
    rest = induced(g, g.full & ~a)
    out = []
    for b in enumerate_mis(rest.graph).sets:
        lifted = rest.lift(b)
        out.append((lifted, is_maximal_bipartite(g, a | lifted)))
    return out


def enumerate_mibs_canonical(g: Graph, workers: int = 1) -> MibsCensus:
    """Build every maximal induced bipartite subgraph as ``A + B`` with ``A`` a
    maximal independent set of G and ``B`` one of ``G - A``.

    Each vertex set is kept once. Its witnesses are the generating pairs with
    ``|A| >= |B|``; equal-size pairs are stored once, smaller mask first.
    """
    family = enumerate_mis(g)
    expanded = pool_map(
        _complement_pairs, [(g, a) for a in family.sets], workers=workers
    )

    witnesses: dict[int, set[tuple[int, int]]] = defaultdict(set)
    ordered_pairs = 0
    nonmaximal = 0
    complement_mis: dict[int, int] = {}
    for a, pairs in zip(family.sets, expanded):
        complement_mis[a] = len(pairs)
        for b, maximal in pairs:
            if not maximal:
                nonmaximal += 1
                continue
            ordered_pairs += 1
            union = a | b
            entry = witnesses[union]
            size_a, size_b = popcount(a), popcount(b)
            if size_a > size_b:
                entry.add((a, b))
            elif size_a == size_b:
                entry.add((min(a, b), max(a, b)))

    records = [
        MibsRecord(vertices=mask, witnesses=sorted(witnesses[mask]))
        for mask in sorted(witnesses)
    ]

    histogram: dict[int, int] = defaultdict(int)
    for record in records:
        for size in {popcount(a) for a, _ in record.witnesses}:
            histogram[size] += 1

    envelope = []
    for k in sorted(histogram):
        sets_k = family.of_size(k)
        widest = max((complement_mis[a] for a in sets_k), default=0)
        envelope.append(
            EnvelopeRow(
                k=k,
                records=histogram[k],
                mis_k=len(sets_k),
                max_complement_mis=widest,
                holds=histogram[k] <= len(sets_k) * widest,
            )
        )

    census = MibsCensus(
        n=g.n,
        records=records,
        distinct_count=len(records),
        ordered_pair_count=ordered_pairs,
        a_size_histogram=dict(histogram),
        nonmaximal_candidates=nonmaximal,
        records_without_witness=sum(1 for r in records if not r.witnesses),
        envelope=envelope,
    )
    log(
        "DEBUG",
        f"n={g.n}: {census.distinct_count} subgraphs from "
        f"{ordered_pairs} ordered pairs, {nonmaximal} non-maximal candidates",
    )
    return census


def k4_component(g: Graph) -> int:
    for comp in components(g):
        if popcount(comp) == 4 and is_clique(g, comp):
            return comp
    raise PreconditionViolation("graph has no K4 component")


def mibs_component_identity_check(g: Graph) -> ComponentIdentityReport:
    """Check ``mibs(G) = 6 mibs(G - K)`` for a K4 component ``K`` and that every
    maximal induced bipartite subgraph takes exactly two vertices of ``K``."""
    component = k4_component(g)
    census = enumerate_mibs_canonical(g)
    rest = enumerate_mibs_canonical(induced(g, g.full & ~component).graph)
    return ComponentIdentityReport(
        component=component,
        mibs=census.distinct_count,
        mibs_rest=rest.distinct_count,
        identity_holds=census.distinct_count == 6 * rest.distinct_count,
        every_record_meets_twice=all(
            popcount(r.vertices & component) == 2 for r in census.records
        ),
    )
