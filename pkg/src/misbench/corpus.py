from __future__ import annotations

import random
from typing import NamedTuple

import networkx as nx

from .exception import PreconditionViolation
from .graph import Graph, is_k4_free
from .log import escape_tag, log

MAX_ATTEMPTS = 100


class Instance(NamedTuple):
    seed: int
    graph: Graph


def from_networkx(nxg: nx.Graph) -> Graph:
    """Convert a graph on nodes ``0..n-1``."""
    return Graph.from_edges(nxg.number_of_nodes(), nxg.edges())


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def random_graph(n: int, p: float, seed: int) -> Graph:
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_subcubic_k4free(n: int, seed: int, drop: float = 0.1) -> Graph:
    """Random cubic graph shuffled by edge swaps, thinned, and rejected while it
    contains a K4. Deterministic in ``seed``."""
    if n < 4 or n % 2:
        raise PreconditionViolation("cubic graphs need an even order >= 4", n)
    rng = random.Random(seed)
    for attempt in range(MAX_ATTEMPTS):
        nxg = nx.random_regular_graph(3, n, seed=rng.randrange(2**32))
        try:
            nx.double_edge_swap(
                nxg, nswap=n, max_tries=100 * n, seed=rng.randrange(2**32)
            )
        except nx.NetworkXException as e:
            log(
                "DEBUG",
                f"seed {seed}: attempt {attempt} edge swaps stopped early: "
                + escape_tag(str(e)),
            )
        nxg.remove_edges_from(
            [e for e in sorted(nxg.edges()) if rng.random() < drop]
        )
        g = from_networkx(nxg)
        if is_k4_free(g):
            return g
        log("DEBUG", f"seed {seed}: attempt {attempt} contains a K4, retrying")
    raise PreconditionViolation("no K4-free sample found", seed)


def corpus_seeds(count: int, seed: int) -> list[int]:
    """The manifest: one derived seed per instance."""
    rng = random.Random(seed)
    return [rng.randrange(2**31) for _ in range(count)]


def instance_from_seed(seed: int, min_n: int = 8, max_n: int = 20) -> Instance:
    rng = random.Random(seed)
    n = rng.choice(range(min_n + min_n % 2, max_n + 1, 2))
    return Instance(seed, random_subcubic_k4free(n, rng.randrange(2**32)))


def subcubic_corpus(
    count: int, seed: int, min_n: int = 8, max_n: int = 20
) -> list[Instance]:
    return [instance_from_seed(s, min_n, max_n) for s in corpus_seeds(count, seed)]
