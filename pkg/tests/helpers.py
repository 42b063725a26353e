"""Instance builders and canonical forms shared across the test suite."""

from __future__ import annotations

import random

from metricenum.graphs import Graph, graph_from_edges, is_connected
from metricenum.hypergraphs import Hypergraph, hypergraph_from_edges


def canon(sets) -> list[tuple[int, ...]]:
    """Order-free canonical form for a family of vertex sets."""
    return sorted(tuple(sorted(s)) for s in sets)


def random_connected(rng: random.Random, n: int, p: float = 0.45) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = graph_from_edges(n, edges)
        if is_connected(g):
            return g


def random_hypergraph(rng: random.Random, n: int, m: int) -> Hypergraph:
    """m nonempty edges drawn from a universe of n >= 1 vertices."""
    return hypergraph_from_edges(
        n, [rng.sample(range(n), rng.randint(1, n)) for _ in range(m)]
    )


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """Center 0 joined to 1..leaves."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def triangle_pendant() -> Graph:
    """Triangle 0,1,2 with pendant 3 attached to 2."""
    return graph_from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def h1() -> Hypergraph:
    """8 vertices, 4 edges; power-of-two shape fitting the resolving gadget."""
    return hypergraph_from_edges(8, [[0, 1], [1, 2, 3], [2, 4], [3, 4, 5, 6, 7]])


def h2() -> Hypergraph:
    """6 vertices, 4 edges; the geodetic gadget golden."""
    return hypergraph_from_edges(6, [[0, 1], [1, 2, 3], [2, 4], [3, 4, 5]])


def ext_golden() -> Hypergraph:
    """3 vertices, 3 edges; conforming shape for the extension gadgets."""
    return hypergraph_from_edges(3, [[0, 1], [1, 2], [2]])


# Worked out by hand from the edge lists and frozen against both engines.
H2_TRANSVERSALS = [
    (0, 2, 3), (0, 2, 4), (0, 2, 5), (0, 3, 4), (1, 2, 3), (1, 2, 5), (1, 4),
]
