"""Enumeration engines and instrumented solution streams.

All enumerators hand back a SolutionStream: a pull-based iterator of
frozensets with a tick counter. One tick is one edge-membership batch (one
hypergraph edge scanned against the current partial solution; graph engines
count one tick per adjacency-bitset probe). The counters exist so delay
behavior is observable and testable; they are deterministic for a fixed
input and engine.

Two independent transversal engines are kept on purpose:

* BERGE_SEQUENTIAL folds edges in one at a time, maintaining the full family
  of minimal transversals of the prefix. Simple, auditable, memory-hungry.
* DFS_HITTING_SET branches on the lowest-index uncovered edge, keeping a
  per-member mask of "critical" (privately hit) edges; a branch dies as soon
  as some member loses its last critical edge. Bounded memory, no duplicate
  output, and every emitted set is minimal by construction.

They must agree on every instance; the test suite holds them to that.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from typing import Iterator

from .bitset import bit, iter_bits, lowest_bit, to_frozenset
from .errors import EmptyEdgeError
from .graphs import Graph
from .hypergraphs import Hypergraph

__all__ = [
    "Ticker",
    "SolutionStream",
    "EngineChoice",
    "enumerate_minimal_transversals",
    "enumerate_maximal_independent_sets",
    "enumerate_minimal_vertex_covers",
    "regularize_delay",
]


class Ticker:
    """Mutable work counter shared between an engine and its stream."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def tick(self, n: int = 1) -> None:
        self.count += n


class SolutionStream:
    """Pull-based producer of vertex sets with an instrumented tick counter.

    Single-owner: iterate it once. `ticks` is the engine's work counter at
    the current moment; read it after each pull to measure inter-output
    gaps. `info` carries engine-specific counters (e.g. discarded garbage
    solutions in the reduction decoders).
    """

    def __init__(self, gen: Iterator[frozenset[int]], ticker: Ticker, info: dict | None = None):
        self._gen = gen
        self._ticker = ticker
        self._exhausted = False
        self.info: dict = {} if info is None else info

    def __iter__(self) -> "SolutionStream":
        return self

    def __next__(self) -> frozenset[int]:
        try:
            return next(self._gen)
        except StopIteration:
            self._exhausted = True
            raise

    @property
    def ticks(self) -> int:
        return self._ticker.count

    @property
    def exhausted(self) -> bool:
        return self._exhausted


class EngineChoice(Enum):
    BERGE_SEQUENTIAL = "berge"
    DFS_HITTING_SET = "dfs"


def _berge_solutions(h: Hypergraph, ticker: Ticker) -> Iterator[frozenset[int]]:
    """Edge-by-edge family maintenance; emits once all edges are folded in."""
    fam: list[int] = [0]
    for k, e in enumerate(h.edges):
        prefix = h.edges[: k + 1]
        new: list[int] = []
        seen: set[int] = set()
        for t in fam:
            ticker.tick()
            if t & e:
                # A prefix-minimal transversal that already hits the new edge
                # stays minimal: each member keeps its private edge.
                new.append(t)
                continue
            for v in iter_bits(e):
                c = t | bit(v)
                if c in seen:
                    continue
                if _members_all_private(prefix, c, ticker):
                    seen.add(c)
                    new.append(c)
        fam = new
    for t in fam:
        yield to_frozenset(t)


def _members_all_private(edges: tuple[int, ...], t_mask: int, ticker: Ticker) -> bool:
    """True iff every member of t_mask hits some edge alone (minimality)."""
    for v in iter_bits(t_mask):
        vb = bit(v)
        for e in edges:
            ticker.tick()
            if e & t_mask == vb:
                break
        else:
            return False
    return True


def _dfs_solutions(h: Hypergraph, ticker: Ticker) -> Iterator[frozenset[int]]:
    """Branch on the lowest uncovered edge; prune on lost critical edges."""
    m = h.m
    if m == 0:
        yield frozenset()
        return
    hit = [0] * h.n
    for idx, e in enumerate(h.edges):
        for v in iter_bits(e):
            hit[v] |= 1 << idx
    all_edges = (1 << m) - 1

    def rec(chosen: list[int], crits: list[int], covered: int, excluded: int):
        ticker.tick(m)
        if covered == all_edges:
            yield frozenset(chosen)
            return
        e_idx = lowest_bit(~covered & all_edges)
        ex = excluded
        for v in iter_bits(h.edges[e_idx] & ~ex):
            hv = hit[v]
            new_crits = []
            for c in crits:
                c &= ~hv
                if c == 0:
                    break
                new_crits.append(c)
            else:
                new_crits.append(hv & ~covered)
                yield from rec(chosen + [v], new_crits, covered | hv, ex)
            ex |= bit(v)

    yield from rec([], [], 0, 0)


def enumerate_minimal_transversals(
    h: Hypergraph, engine: EngineChoice | str = EngineChoice.DFS_HITTING_SET
) -> SolutionStream:
    """Stream every minimal transversal of h exactly once.

    Deterministic order per engine; ascending-vertex tie-breaking throughout.
    Raises EmptyEdgeError eagerly: an empty edge admits no transversal.
    """
    if isinstance(engine, str):
        engine = EngineChoice(engine)
    if h.has_empty_edge():
        raise EmptyEdgeError("hypergraph has an empty edge, so it is transversal-free")
    ticker = Ticker()
    if engine is EngineChoice.BERGE_SEQUENTIAL:
        gen = _berge_solutions(h, ticker)
    else:
        gen = _dfs_solutions(h, ticker)
    return SolutionStream(gen, ticker, info={"engine": engine.value})


def _tsukiyama_solutions(g: Graph, ticker: Ticker) -> Iterator[frozenset[int]]:
    """Vertex-by-vertex extension of maximal independent sets.

    Level i holds a maximal independent set of the subgraph induced by
    vertices 0..i-1. A set S with no neighbor of v=i keeps a single child
    S+{v}; otherwise S itself survives, and (S minus N(v)) + {v} is a second
    child when it is maximal and S is its canonical parent (the ascending
    greedy completion of S minus N(v)). Each maximal independent set of the
    next level has exactly one parent, so the output is duplicate-free.
    """
    n = g.n
    adj = g.adjacency

    def rec(i: int, s_mask: int):
        if i == n:
            yield to_frozenset(s_mask)
            return
        av = adj[i]
        ticker.tick()
        if av & s_mask == 0:
            yield from rec(i + 1, s_mask | bit(i))
            return
        yield from rec(i + 1, s_mask)
        base = s_mask & ~av
        cand = base | bit(i)
        below = (1 << i) - 1
        for u in iter_bits(below & ~cand):
            ticker.tick()
            if adj[u] & cand == 0:
                return
        t = base
        for u in range(i):
            if t >> u & 1:
                continue
            ticker.tick()
            if adj[u] & t == 0:
                t |= bit(u)
        if t == s_mask:
            yield from rec(i + 1, cand)

    yield from rec(0, 0)


def enumerate_maximal_independent_sets(g: Graph) -> SolutionStream:
    """Stream every maximal independent set of g exactly once (polynomial delay)."""
    ticker = Ticker()
    return SolutionStream(_tsukiyama_solutions(g, ticker), ticker)


def enumerate_minimal_vertex_covers(g: Graph) -> SolutionStream:
    """Stream every minimal vertex cover: complements of maximal independent sets."""
    inner = enumerate_maximal_independent_sets(g)
    full = frozenset(range(g.n))

    def gen():
        for s in inner:
            yield full - s

    return SolutionStream(gen(), inner._ticker)


def regularize_delay(stream: SolutionStream, budget: int) -> SolutionStream:
    """Smooth a bursty stream: at most one emission per `budget` ticks.

    Solutions are buffered in a FIFO queue. A solution arriving at tick a is
    due at the first multiple of the budget strictly after a, and no earlier
    than one budget after the previous due slot; it is released once the
    inner engine's clock reaches that slot. While the queue stays nonempty
    the inter-emission gap is exactly the budget. When the inner stream is
    exhausted, whatever is still queued is flushed one per tick; the output
    multiset always equals the input multiset, in order.

    The returned stream's tick counter reads the emission slot of the last
    released solution.
    """
    if budget < 1:
        raise ValueError("budget must be a positive tick count")
    out_ticker = Ticker()

    def gen():
        pending: deque[tuple[frozenset[int], int]] = deque()
        next_slot = budget
        while True:
            while pending and pending[0][1] <= stream.ticks:
                sol, slot = pending.popleft()
                out_ticker.count = slot
                yield sol
            try:
                sol = next(stream)
            except StopIteration:
                break
            arrival = stream.ticks
            slot = max(next_slot, budget * (arrival // budget + 1))
            pending.append((sol, slot))
            next_slot = slot + budget
        t = stream.ticks
        while pending and pending[0][1] <= t:
            sol, slot = pending.popleft()
            out_ticker.count = slot
            yield sol
        while pending:
            t += 1
            sol, _ = pending.popleft()
            out_ticker.count = t
            yield sol

    # The info dict is shared, not copied, so counters the inner generator
    # keeps updating stay visible through the wrapper.
    return SolutionStream(gen(), out_ticker, info=stream.info)
