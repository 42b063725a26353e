"""Minimal resolving, geodetic and strong resolving sets via transversals.

Resolving sets are exactly the transversals of a hypergraph with one edge
per vertex pair (the vertices distinguishing that pair), so enumeration
reduces to the transversal engines. Geodetic sets ride the same route on
split graphs; on general graphs they correspond to the minimal consistent
transversals of a hypergraph over vertex PAIRS, enumerated here by a gated
subset scan. Strong resolving sets are the vertex covers of the
mutually-maximally-distant graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .bitset import bit, from_iter, iter_bits, lowest_bit, to_frozenset
from .engine import (
    EngineChoice,
    SolutionStream,
    Ticker,
    enumerate_minimal_transversals,
    enumerate_minimal_vertex_covers,
)
from .errors import DisconnectedError, PreconditionViolation, SizeLimitError, TrivialInstanceError
from .graphs import (
    Graph,
    SplitPartition,
    all_pairs_distances,
    graph_from_edges,
    is_connected,
    split_partition_max_I,
)
from .hypergraphs import Hypergraph, hypergraph_from_edges, sperner_reduce

__all__ = [
    "NOT_SOLUTION",
    "SOLUTION_NOT_MINIMAL",
    "MINIMAL",
    "SolutionClass",
    "PairHypergraph",
    "distinguishing_hypergraph",
    "enumerate_minimal_resolving_sets",
    "classify_resolving",
    "pair_cover_hypergraph",
    "is_consistent",
    "enumerate_minimal_geodetic_sets",
    "split_geodetic_hypergraph",
    "classify_geodetic",
    "mmd_graph",
    "enumerate_minimal_strong_resolving_sets",
    "classify_strong_resolving",
]

NOT_SOLUTION = "not-solution"
SOLUTION_NOT_MINIMAL = "solution-not-minimal"
MINIMAL = "minimal"


@dataclass(frozen=True)
class SolutionClass:
    """Classification of a vertex set against one of the three predicates.

    kind NOT_SOLUTION: witness is the offending object (an undistinguished
    or unresolved pair, or an uncovered vertex). kind SOLUTION_NOT_MINIMAL:
    removable is the lowest droppable member. kind MINIMAL: member_witnesses
    pairs each member with an object it alone accounts for.
    """

    kind: str
    witness: object = None
    removable: int | None = None
    member_witnesses: tuple = ()


@dataclass(frozen=True)
class PairHypergraph:
    """Hypergraph whose nodes are the vertex pairs of a graph.

    `pairs` lists the nodes as (i, j) tuples with i < j in lexicographic
    order; `edges[v]` is the set of pairs {x, y} with v on a shortest x-y
    path. Every pair {v, y} belongs to E_v, since endpoints lie on their
    own shortest paths.
    """

    graph_n: int
    pairs: tuple[tuple[int, int], ...]
    edges: tuple[frozenset[tuple[int, int]], ...]

    @property
    def pair_index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.pairs)}

    def as_hypergraph(self) -> Hypergraph:
        """The same structure over pair indices, for transversal machinery."""
        idx = self.pair_index
        return hypergraph_from_edges(
            len(self.pairs), [[idx[p] for p in e] for e in self.edges]
        )


def _pair_key(pair: Iterable[int]) -> tuple[int, int]:
    x, y = pair
    if x == y:
        raise ValueError(f"pair endpoints must be distinct, got ({x}, {y})")
    return (x, y) if x < y else (y, x)


def distinguishing_hypergraph(g: Graph) -> Hypergraph:
    """One edge per vertex pair a<b: the vertices with dist(a,.) != dist(b,.).

    Edges follow lexicographic pair order and duplicates are retained;
    apply sperner_reduce separately. UNREACHABLE counts as a distance, so
    disconnected graphs are fine. No edge is ever empty: a itself always
    distinguishes the pair {a, b}.
    """
    d = all_pairs_distances(g).rows
    edges = []
    for a, b in itertools.combinations(range(g.n), 2):
        edges.append(from_iter(v for v in range(g.n) if d[a][v] != d[b][v]))
    return Hypergraph(g.n, tuple(edges))


def enumerate_minimal_resolving_sets(
    g: Graph, engine: EngineChoice = EngineChoice.DFS_HITTING_SET
) -> SolutionStream:
    """Stream the minimal resolving sets of g (minimal transversals of the
    Sperner-reduced distinguishing hypergraph)."""
    return enumerate_minimal_transversals(sperner_reduce(distinguishing_hypergraph(g)), engine)


def classify_resolving(g: Graph, s: Iterable[int]) -> SolutionClass:
    """Classify s against the resolving-set definition, straight from distances."""
    s_mask = _vertex_mask(g.n, s)
    d = all_pairs_distances(g).rows
    pairs = list(itertools.combinations(range(g.n), 2))
    masks = [
        from_iter(v for v in range(g.n) if d[a][v] != d[b][v]) for a, b in pairs
    ]
    for (a, b), m in zip(pairs, masks):
        if m & s_mask == 0:
            return SolutionClass(NOT_SOLUTION, witness=(a, b))
    witnesses = []
    for v in iter_bits(s_mask):
        vb = bit(v)
        priv = next((p for p, m in zip(pairs, masks) if m & s_mask == vb), None)
        if priv is None:
            return SolutionClass(SOLUTION_NOT_MINIMAL, removable=v)
        witnesses.append((v, priv))
    return SolutionClass(MINIMAL, member_witnesses=tuple(witnesses))


def pair_cover_hypergraph(g: Graph) -> PairHypergraph:
    """The hypergraph over vertex pairs with one edge E_v per vertex."""
    if not is_connected(g):
        raise DisconnectedError("pair cover hypergraph requires a connected graph")
    d = all_pairs_distances(g).rows
    pairs = tuple(itertools.combinations(range(g.n), 2))
    edges = []
    for v in range(g.n):
        edges.append(
            frozenset((x, y) for x, y in pairs if d[x][v] + d[v][y] == d[x][y])
        )
    return PairHypergraph(g.n, pairs, tuple(edges))


def is_consistent(nodes: Iterable[Iterable[int]]) -> bool:
    """True iff the pair set is the family of ALL pairs of its vertex union."""
    pairset = {_pair_key(p) for p in nodes}
    union = sorted({v for p in pairset for v in p})
    return pairset == set(itertools.combinations(union, 2))


def split_geodetic_hypergraph(
    g: Graph, p: SplitPartition
) -> tuple[frozenset[int], Hypergraph]:
    """Reduce geodetic enumeration on a split graph to transversals.

    Returns (mandatory, h): the independent side I, contained in every
    geodetic set, and a hypergraph over the full vertex range whose edges
    live inside the clique side K. Each clique vertex v not covered by a
    pair of I has, when |I| is maximum, exactly one neighbor u in I and
    contributes the edge (K minus N(u)) plus v. The minimal geodetic sets
    of g are then exactly {I union T : T in Tr(h)}.
    """
    k_mask = from_iter(p.clique)
    i_mask = from_iter(p.independent)
    if k_mask & i_mask or (k_mask | i_mask) != (1 << g.n) - 1:
        raise PreconditionViolation("clique and independent sides must partition the vertices")
    for v in iter_bits(k_mask):
        if k_mask & ~g.adjacency[v] & ~bit(v):
            raise PreconditionViolation("clique side is not a clique")
    for v in iter_bits(i_mask):
        if g.adjacency[v] & i_mask:
            raise PreconditionViolation("independent side is not independent")
    if len(p.independent) <= 1:
        raise TrivialInstanceError("independent side has at most one vertex")
    d = all_pairs_distances(g).rows
    ivs = sorted(p.independent)
    edges = []
    for v in sorted(p.clique):
        covered = any(
            d[x][v] + d[v][y] == d[x][y] for x, y in itertools.combinations(ivs, 2)
        )
        if covered:
            continue
        i_neighbors = g.adjacency[v] & i_mask
        if i_neighbors.bit_count() != 1:
            raise PreconditionViolation(
                "uncovered clique vertex without a unique independent neighbor; "
                "independent side is not maximum"
            )
        u = lowest_bit(i_neighbors)
        edges.append((k_mask & ~g.adjacency[u]) | bit(v))
    return to_frozenset(i_mask), Hypergraph(g.n, tuple(edges))


def enumerate_minimal_geodetic_sets(
    g: Graph,
    engine: EngineChoice = EngineChoice.DFS_HITTING_SET,
    size_limit: int = 20,
) -> SolutionStream:
    """Stream the minimal geodetic sets of a connected graph.

    Split graphs (with at least two independent vertices, i.e. all but
    complete graphs) take the transversal route; a complete graph's only
    minimal geodetic set is its full vertex set. Everything else falls to
    a subset scan over supersets of the simplicial vertices, gated by
    size_limit: a simplicial vertex is covered by no one else, so it sits
    in every geodetic set.
    """
    if not is_connected(g):
        raise DisconnectedError("geodetic sets are only defined on connected graphs")
    p = split_partition_max_I(g)
    if p is not None and len(p.independent) <= 1:
        ticker = Ticker()

        def complete_gen():
            yield frozenset(range(g.n))

        return SolutionStream(complete_gen(), ticker, {"engine": "complete"})
    if p is not None:
        mandatory, sub = split_geodetic_hypergraph(g, p)
        inner = enumerate_minimal_transversals(sub, engine)

        def split_gen():
            for t in inner:
                yield mandatory | t

        return SolutionStream(split_gen(), inner._ticker, dict(inner.info, path="split"))
    if g.n > size_limit:
        raise SizeLimitError(
            f"general-path geodetic enumeration is gated at {size_limit} vertices, got {g.n}"
        )
    ph = pair_cover_hypergraph(g)
    pair_bit = {pair: bit(i) for i, pair in enumerate(ph.pairs)}
    edge_masks = [sum(pair_bit[q] for q in e) for e in ph.edges]
    d = all_pairs_distances(g).rows
    simplicial = [
        v
        for v in range(g.n)
        if all(g.has_edge(x, y) for x, y in itertools.combinations(sorted(g.neighbors(v)), 2))
    ]
    mand_mask = from_iter(simplicial)
    free = [v for v in range(g.n) if not mand_mask >> v & 1]
    ticker = Ticker()

    def scan_gen():
        found: list[int] = []
        for size in range(len(free) + 1):
            for combo in itertools.combinations(free, size):
                s_mask = mand_mask | from_iter(combo)
                if any(s_mask & f == f for f in found):
                    continue
                ticker.tick(g.n)
                family = 0
                for x, y in itertools.combinations(sorted(to_frozenset(s_mask)), 2):
                    family |= pair_bit[(x, y)]
                if all(e & family for e in edge_masks):
                    found.append(s_mask)
                    yield to_frozenset(s_mask)

    return SolutionStream(scan_gen(), ticker, {"engine": "subset-scan"})


def _covered_mask(g: Graph, d, s_mask: int) -> int:
    """Bitset of vertices covered by s: members, plus shortest-path interiors."""
    covered = s_mask
    members = list(iter_bits(s_mask))
    for x, y in itertools.combinations(members, 2):
        dxy = d[x][y]
        for v in range(g.n):
            if not covered >> v & 1 and d[x][v] + d[v][y] == dxy:
                covered |= bit(v)
    return covered


def classify_geodetic(g: Graph, s: Iterable[int]) -> SolutionClass:
    """Classify s against the geodetic-set definition."""
    if not is_connected(g):
        raise DisconnectedError("geodetic sets are only defined on connected graphs")
    s_mask = _vertex_mask(g.n, s)
    d = all_pairs_distances(g).rows
    full = (1 << g.n) - 1
    covered = _covered_mask(g, d, s_mask)
    if covered != full:
        return SolutionClass(NOT_SOLUTION, witness=lowest_bit(~covered & full))
    witnesses = []
    for u in iter_bits(s_mask):
        rest = _covered_mask(g, d, s_mask & ~bit(u))
        if rest == full:
            return SolutionClass(SOLUTION_NOT_MINIMAL, removable=u)
        witnesses.append((u, lowest_bit(~rest & full)))
    return SolutionClass(MINIMAL, member_witnesses=tuple(witnesses))


def mmd_graph(g: Graph) -> Graph:
    """The auxiliary graph joining mutually maximally distant vertex pairs.

    u and v are joined when d(u,v) >= d(u,w) for every neighbor w of v and
    d(u,v) >= d(w,v) for every neighbor w of u. Strong resolving sets of g
    are exactly the vertex covers of this graph.
    """
    if not is_connected(g):
        raise DisconnectedError("the mutually-maximally-distant graph requires connectivity")
    d = all_pairs_distances(g).rows
    edges = []
    for u, v in itertools.combinations(range(g.n), 2):
        duv = d[u][v]
        if all(duv >= d[u][w] for w in iter_bits(g.adjacency[v])) and all(
            duv >= d[w][v] for w in iter_bits(g.adjacency[u])
        ):
            edges.append((u, v))
    return graph_from_edges(g.n, edges)


def enumerate_minimal_strong_resolving_sets(g: Graph) -> SolutionStream:
    """Stream the minimal strong resolving sets (minimal vertex covers of
    the mutually-maximally-distant graph)."""
    return enumerate_minimal_vertex_covers(mmd_graph(g))


def classify_strong_resolving(g: Graph, s: Iterable[int]) -> SolutionClass:
    """Classify s against the strong-resolving definition directly.

    s strongly resolves when for every pair u,v some member w has u on a
    shortest w-v path or v on a shortest w-u path. No detour through the
    auxiliary graph, so this validates mmd_graph independently.
    """
    if not is_connected(g):
        raise DisconnectedError("strong resolving sets are only defined on connected graphs")
    s_mask = _vertex_mask(g.n, s)
    d = all_pairs_distances(g).rows
    pairs = list(itertools.combinations(range(g.n), 2))
    masks = []
    for u, v in pairs:
        duv = d[u][v]
        masks.append(
            from_iter(
                w
                for w in range(g.n)
                if d[w][u] + duv == d[w][v] or d[w][v] + duv == d[w][u]
            )
        )
    for (u, v), m in zip(pairs, masks):
        if m & s_mask == 0:
            return SolutionClass(NOT_SOLUTION, witness=(u, v))
    witnesses = []
    for w in iter_bits(s_mask):
        wb = bit(w)
        priv = next((p for p, m in zip(pairs, masks) if m & s_mask == wb), None)
        if priv is None:
            return SolutionClass(SOLUTION_NOT_MINIMAL, removable=w)
        witnesses.append((w, priv))
    return SolutionClass(MINIMAL, member_witnesses=tuple(witnesses))


def _vertex_mask(n: int, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        mask |= bit(v)
    return mask
