from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .const import MAX_ORDER
from .exception import GuardViolation, PreconditionViolation
from .utils import bit, iter_bits, popcount

VertexSet = int
"""Bit mask over vertex indices ``0..n-1``."""


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph with one neighbor mask per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GuardViolation("order", MAX_ORDER, self.n)
        if len(self.adj) != self.n:
            raise PreconditionViolation(
                "adjacency rows do not match the order", (self.n, len(self.adj))
            )
        full = self.full
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise PreconditionViolation("neighbor out of range", v)
            if row >> v & 1:
                raise PreconditionViolation("loop at vertex", v)
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise PreconditionViolation("asymmetric adjacency", (v, u))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GuardViolation("order", MAX_ORDER, n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionViolation("edge endpoint out of range", (u, v))
            if u == v:
                raise PreconditionViolation("loop at vertex", u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise PreconditionViolation("a cycle needs at least 3 vertices", n)
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def union(cls, *graphs: "Graph") -> "Graph":
        """Disjoint union; vertices of later graphs are shifted up."""
        rows: list[int] = []
        for g in graphs:
            shift = len(rows)
            rows.extend(row << shift for row in g.adj)
        return cls(len(rows), tuple(rows))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def complement(self) -> "Graph":
        full = self.full
        return Graph(
            self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj))
        )

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Return the graph whose vertex ``i`` is vertex ``order[i]`` of ``self``."""
        if sorted(order) != list(range(self.n)):
            raise PreconditionViolation(
                "relabeling is not a permutation", tuple(order)
            )
        position = [0] * self.n
        for new, old in enumerate(order):
            position[old] = new
        rows = []
        for old in order:
            row = 0
            for u in iter_bits(self.adj[old]):
                row |= 1 << position[u]
            rows.append(row)
        return Graph(self.n, tuple(rows))


class DegreeStats(NamedTuple):
    max_degree: int
    degrees: list[int]


class InducedSubgraph(NamedTuple):
    graph: Graph
    mapping: tuple[int, ...]
    """``mapping[i]`` is the original index of vertex ``i`` of ``graph``."""

    def lift(self, mask: VertexSet) -> VertexSet:
        """Translate a vertex set of the subgraph back to the original graph."""
        out = 0
        for v in iter_bits(mask):
            out |= 1 << self.mapping[v]
        return out


def degree_stats(g: Graph) -> DegreeStats:
    degrees = [popcount(row) for row in g.adj]
    return DegreeStats(max(degrees, default=0), degrees)


def k4_witness(g: Graph) -> Optional[tuple[int, int, int, int]]:
    """Find four mutually adjacent vertices by extending every triangle."""
    for u in range(g.n):
        for v in iter_bits(g.adj[u] >> (u + 1) << (u + 1)):
            common = g.adj[u] & g.adj[v]
            for w in iter_bits(common >> (v + 1) << (v + 1)):
                rest = common & g.adj[w]
                if rest:
                    x = (rest & -rest).bit_length() - 1
                    return tuple(sorted((u, v, w, x)))  # type: ignore[return-value]
    return None


def is_k4_free(g: Graph) -> bool:
    return k4_witness(g) is None


def induced(g: Graph, s: VertexSet) -> InducedSubgraph:
    if s & ~g.full or s < 0:
        raise PreconditionViolation("vertex set outside the graph", s)
    mapping = tuple(iter_bits(s))
    position = {old: new for new, old in enumerate(mapping)}
    rows = []
    for old in mapping:
        row = 0
        for u in iter_bits(g.adj[old] & s):
            row |= 1 << position[u]
        rows.append(row)
    return InducedSubgraph(Graph(len(mapping), tuple(rows)), mapping)


def two_coloring(
    g: Graph, mask: Optional[VertexSet] = None
) -> Optional[tuple[VertexSet, VertexSet]]:
    """Breadth-first two-coloring of ``g[mask]``.

    Returns the two color classes, or ``None`` when an odd cycle exists.
    """
    mask = g.full if mask is None else mask
    sides = [0, 0]
    remaining = mask
    while remaining:
        frontier = remaining & -remaining
        sides[0] |= frontier
        seen = frontier
        parity = 0
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            reach &= mask
            if reach & sides[parity]:
                return None
            frontier = reach & ~seen
            seen |= frontier
            parity ^= 1
            sides[parity] |= frontier
        remaining &= ~seen
    return sides[0], sides[1]


def is_bipartite(g: Graph, mask: Optional[VertexSet] = None) -> bool:
    return two_coloring(g, mask) is not None


def components(g: Graph) -> list[VertexSet]:
    result = []
    remaining = g.full
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        result.append(seen)
        remaining &= ~seen
    return result


def closed_neighborhood(g: Graph, mask: VertexSet) -> VertexSet:
    out = mask
    for v in iter_bits(mask):
        out |= g.adj[v]
    return out


def is_independent(g: Graph, mask: VertexSet) -> bool:
    return all(not g.adj[v] & mask for v in iter_bits(mask))


def is_dominating(g: Graph, mask: VertexSet) -> bool:
    return closed_neighborhood(g, mask) == g.full


def is_maximal_independent(g: Graph, mask: VertexSet) -> bool:
    return is_independent(g, mask) and is_dominating(g, mask)


def is_clique(g: Graph, mask: VertexSet) -> bool:
    return all((g.adj[v] | bit(v)) & mask == mask for v in iter_bits(mask))


def clique_components(g: Graph) -> Optional[list[int]]:
    """Sizes of the components when every component is a clique, else ``None``."""
    sizes = []
    for comp in components(g):
        if not is_clique(g, comp):
            return None
        sizes.append(popcount(comp))
    return sizes

