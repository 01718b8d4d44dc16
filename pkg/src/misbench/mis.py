from __future__ import annotations

from typing import Optional

from .bounds import eppstein, nielsen
from .const import BRUTE_FORCE_MAX_ORDER
from .exception import GuardViolation
from .graph import Graph, VertexSet, is_maximal_independent
from .models.mis import (
    BoundCheckReport,
    BoundSlack,
    BranchingStats,
    MisFamily,
    SizeProfile,
)
from .utils import bits_to_list, iter_bits, popcount


def _guard_order(g: Graph, limit: int = BRUTE_FORCE_MAX_ORDER) -> None:
    if g.n > limit:
        raise GuardViolation("brute-force order", limit, g.n)


def enumerate_mis_bruteforce(g: Graph) -> MisFamily:
    """Test every vertex subset for independence and maximality."""
    _guard_order(g)
    sets = [mask for mask in range(1 << g.n) if is_maximal_independent(g, mask)]
    return MisFamily.from_sets(g.n, sets)


def enumerate_mis(g: Graph) -> MisFamily:
    """Maximal cliques of the complement via Bron–Kerbosch with Tomita pivoting."""
    full = g.full
    non_adj = [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: popcount(p & non_adj[u]))
        for v in iter_bits(p & ~non_adj[pivot]):
            expand(r | 1 << v, p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return MisFamily.from_sets(g.n, found)


def _max_degree_vertex(g: Graph, avail: VertexSet) -> tuple[int, int]:
    best, best_degree = -1, -1
    for v in iter_bits(avail):
        d = popcount(g.adj[v] & avail)
        if d > best_degree:
            best, best_degree = v, d
    return best, best_degree


def enumerate_mis_branching(g: Graph, k_cap: Optional[int] = None) -> MisFamily:
    """Enumerate maximal independent sets of size ``<= k_cap`` by branching.

    Every maximal independent set of G either avoids a vertex ``u`` (and is one
    of ``G - u``) or contains it (and minus ``u`` is one of ``G - N[u]``). The
    recursion branches on a maximum-degree vertex, lowest index first; the
    candidates it produces are filtered for maximality in ``g`` because the
    first branch also yields sets that leave ``u`` undominated.
    """
    k_cap = g.n if k_cap is None else k_cap
    stats = BranchingStats()
    found: list[int] = []

    def leaf(chosen: int) -> None:
        stats.leaves += 1
        if is_maximal_independent(g, chosen):
            found.append(chosen)
        else:
            stats.nonmaximal += 1

    def branch(avail: int, chosen: int, budget: int) -> None:
        stats.nodes += 1
        if not avail:
            leaf(chosen)
            return
        u, degree = _max_degree_vertex(g, avail)
        if degree == 0:
            # isolated in what is left: any maximal extension takes them all
            if popcount(avail) <= budget:
                leaf(chosen | avail)
            return
        branch(avail & ~(1 << u), chosen, budget)
        if budget >= 1:
            branch(avail & ~(g.adj[u] | 1 << u), chosen | 1 << u, budget - 1)

    if k_cap >= 0:
        branch(g.full, 0, k_cap)
    return MisFamily.from_sets(g.n, found, branching=stats)


def mis_profile(g: Graph) -> SizeProfile:
    return enumerate_mis(g).profile


def minimum_maximal_independent_set(g: Graph) -> VertexSet:
    """Smallest maximal independent set, lexicographically first among ties."""
    return min(enumerate_mis(g).sets, key=lambda s: (popcount(s), bits_to_list(s)))


def check_bounds(g: Graph, profile: Optional[SizeProfile] = None) -> BoundCheckReport:
    """Compare the profile with the Moon–Moser, Eppstein and Nielsen bounds.

    Violations are reported, never raised.
    """
    profile = profile or mis_profile(g)
    n = g.n
    total = profile.total
    checks = [
        BoundSlack(
            bound="moon_moser",
            k=n,
            count=total,
            value=f"3^({n}/3)",
            holds=total**3 <= 3**n,
            tight=total**3 == 3**n,
        )
    ]
    for k in range(n + 1):
        count = profile.at_most(k)
        value = eppstein(n, k).exact
        assert value is not None
        checks.append(
            BoundSlack(
                bound="eppstein",
                k=k,
                count=count,
                value=str(value),
                holds=count <= value,
                tight=count == value,
            )
        )
    for k in range(n + 1):
        count = profile.exactly(k)
        if not count:
            continue
        value = nielsen(n, k).exact
        assert value is not None
        checks.append(
            BoundSlack(
                bound="nielsen",
                k=k,
                count=count,
                value=str(value),
                holds=count <= value,
                tight=count == value,
            )
        )
    return BoundCheckReport(n=n, profile=profile, checks=checks)
