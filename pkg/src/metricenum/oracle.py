"""Brute-force ground truth, independent of the enumeration engines.

Every predicate here is evaluated straight from its definition on distance
matrices or edge bitsets, never through the transversal machinery, so the
two routes can check each other. All searches are ascending-size subset
scans with superset pruning: once a minimal solution is recorded, every
superset met later is skipped, which is exact for any predicate because a
proper subset of a candidate is always visited first.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from .bitset import bit, from_iter
from .errors import DisconnectedError, SizeLimitError
from .graphs import Graph, all_pairs_distances, is_connected
from .hypergraphs import Hypergraph

if TYPE_CHECKING:
    from .metric import PairHypergraph

__all__ = [
    "MonotonePredicate",
    "transversal_predicate",
    "resolving_predicate",
    "geodetic_predicate",
    "strong_resolving_predicate",
    "brute_minimal_solutions",
    "brute_minimal_consistent_transversals",
    "spot_check_monotone",
]


@dataclass(frozen=True)
class MonotonePredicate:
    """A vertex-set predicate over ground set 0..ground_size-1.

    `evaluate` takes an int bitset. `monotone` declares that supersets of
    solutions are solutions; the flag is metadata (spot-checked in tests,
    not enforced here).
    """

    ground_size: int
    evaluate: Callable[[int], bool]
    monotone: bool


def transversal_predicate(h: Hypergraph) -> MonotonePredicate:
    """S is a solution iff S meets every edge. An empty edge kills all S."""
    edges = h.edges
    return MonotonePredicate(h.n, lambda mask: all(e & mask for e in edges), True)


def resolving_predicate(g: Graph) -> MonotonePredicate:
    """S resolves iff every vertex pair has distinct distances to some member.

    UNREACHABLE is a distance value, so the predicate is meaningful on
    disconnected graphs too.
    """
    d = all_pairs_distances(g).rows
    diff = []
    for a, b in itertools.combinations(range(g.n), 2):
        diff.append(from_iter(v for v in range(g.n) if d[a][v] != d[b][v]))
    return MonotonePredicate(g.n, lambda mask: all(e & mask for e in diff), True)


def geodetic_predicate(g: Graph) -> MonotonePredicate:
    """S is geodetic iff every vertex lies on a shortest path between members.

    A member covers itself (the degenerate x = y case), so each vertex v
    gets the singleton {v} among its covering sets.
    """
    if not is_connected(g):
        raise DisconnectedError("geodetic sets are only defined on connected graphs")
    d = all_pairs_distances(g).rows
    cover: list[list[int]] = [[bit(v)] for v in range(g.n)]
    for x, y in itertools.combinations(range(g.n), 2):
        pm = bit(x) | bit(y)
        for v in range(g.n):
            if d[x][v] + d[v][y] == d[x][y]:
                cover[v].append(pm)

    def ok(mask: int) -> bool:
        return all(any(pm & mask == pm for pm in pms) for pms in cover)

    return MonotonePredicate(g.n, ok, True)


def strong_resolving_predicate(g: Graph) -> MonotonePredicate:
    """S strongly resolves iff for every pair u,v some w in S sees u on a
    shortest w-v path or v on a shortest w-u path."""
    if not is_connected(g):
        raise DisconnectedError("strong resolving sets are only defined on connected graphs")
    d = all_pairs_distances(g).rows
    witness = []
    for u, v in itertools.combinations(range(g.n), 2):
        duv = d[u][v]
        witness.append(
            from_iter(
                w
                for w in range(g.n)
                if d[w][u] + duv == d[w][v] or d[w][v] + duv == d[w][u]
            )
        )
    return MonotonePredicate(g.n, lambda mask: all(e & mask for e in witness), True)


def brute_minimal_solutions(p: MonotonePredicate, limit: int = 20) -> list[frozenset[int]]:
    """All inclusion-minimal solutions of p, canonically ordered.

    Ascending-size scan over all subsets; a candidate containing an already
    reported solution is pruned, so every survivor that satisfies p is
    minimal. Output order is (size, lexicographic), which is canonical.
    """
    if p.ground_size > limit:
        raise SizeLimitError(f"ground set of size {p.ground_size} exceeds limit {limit}")
    found_masks: list[int] = []
    out: list[frozenset[int]] = []
    for size in range(p.ground_size + 1):
        for combo in itertools.combinations(range(p.ground_size), size):
            mask = from_iter(combo)
            if any(mask & f == f for f in found_masks):
                continue
            if p.evaluate(mask):
                found_masks.append(mask)
                out.append(frozenset(combo))
    return out


def brute_minimal_consistent_transversals(
    ph: "PairHypergraph",
) -> list[frozenset[tuple[int, int]]]:
    """All minimal consistent transversals of a pair-cover hypergraph.

    A consistent node set is the family of all pairs of some vertex set, so
    the scan runs over vertex subsets S (where hitting every edge is
    monotone) and reports each minimal S as its pair family. Pairs come
    back as (i, j) tuples with i < j.
    """
    n = ph.graph_n
    if n > 10:
        raise SizeLimitError(f"pair-hypergraph scan is limited to 10 vertices, got {n}")
    found_masks: list[int] = []
    out: list[frozenset[tuple[int, int]]] = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            mask = from_iter(combo)
            if any(mask & f == f for f in found_masks):
                continue
            family = frozenset(
                (x, y) for x, y in itertools.combinations(sorted(combo), 2)
            )
            if all(edge & family for edge in ph.edges):
                found_masks.append(mask)
                out.append(family)
    return out


def spot_check_monotone(p: MonotonePredicate, rng: random.Random, rounds: int = 64) -> bool:
    """Randomly test that p(S) implies p(T) for S subseteq T."""
    full = (1 << p.ground_size) - 1
    for _ in range(rounds):
        s = rng.getrandbits(p.ground_size) if p.ground_size else 0
        t = s | (rng.getrandbits(p.ground_size) if p.ground_size else 0)
        if p.evaluate(s) and not p.evaluate(t & full):
            return False
    return True
