"""Simple undirected graphs with bitset adjacency, distances, and structure.

Vertices are 0-based ints internally; the text format is 1-based. A Graph is
immutable: `adjacency[v]` is an int bitset of neighbors. Distances are BFS
hop counts with UNREACHABLE (-1) as an explicit value for cross-component
pairs; UNREACHABLE is a distance in its own right, so a vertex whose distance
to exactly one endpoint of a pair is UNREACHABLE distinguishes that pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .bitset import bit, from_iter, iter_bits, to_frozenset
from .errors import ParseError

__all__ = [
    "UNREACHABLE",
    "Graph",
    "DistanceMatrix",
    "SplitPartition",
    "TwinClass",
    "graph_from_edges",
    "all_pairs_distances",
    "on_shortest_path",
    "twin_classes",
    "split_partition_max_I",
    "is_connected",
    "parse_graph",
    "write_graph_text",
]

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adjacency[v] is an int bitset of neighbors."""

    n: int
    adjacency: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def neighbors(self, v: int) -> frozenset[int]:
        return to_frozenset(self.adjacency[v])


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs BFS distances; rows[u][v] is UNREACHABLE across components."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]


@dataclass(frozen=True)
class SplitPartition:
    """A split partition: `clique` is a clique, `independent` an independent set."""

    clique: frozenset[int]
    independent: frozenset[int]


@dataclass(frozen=True)
class TwinClass:
    """A twin-equivalence class; kind is "true", "false" or "singleton"."""

    members: frozenset[int]
    kind: str


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph on vertices 0..n-1; rejects loops and out-of-range ends."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= bit(v)
        adj[v] |= bit(u)
    return Graph(n, tuple(adj))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; unreachable pairs get UNREACHABLE."""
    rows = []
    for s in range(g.n):
        dist = [UNREACHABLE] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[u]
            for v in iter_bits(g.adjacency[u]):
                if dist[v] == UNREACHABLE:
                    dist[v] = du + 1
                    q.append(v)
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def on_shortest_path(d: DistanceMatrix, x: int, v: int, y: int) -> bool:
    """True iff v lies on some shortest x-y path (endpoints included).

    False whenever any of the three legs is UNREACHABLE.
    """
    dxv = d.rows[x][v]
    dvy = d.rows[v][y]
    dxy = d.rows[x][y]
    if dxv == UNREACHABLE or dvy == UNREACHABLE or dxy == UNREACHABLE:
        return False
    return dxv + dvy == dxy


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = bit(0)
    q = deque([0])
    while q:
        u = q.popleft()
        fresh = g.adjacency[u] & ~seen
        seen |= fresh
        q.extend(iter_bits(fresh))
    return seen == (1 << g.n) - 1


def twin_classes(g: Graph) -> list[TwinClass]:
    """Partition V into twin classes.

    Two vertices are false twins when their open neighborhoods coincide and
    true twins when their closed neighborhoods coincide (which forces the
    edge between them). A vertex with neither relation forms a singleton
    class. Classes are sorted by their smallest member.
    """
    open_groups: dict[int, list[int]] = {}
    closed_groups: dict[int, list[int]] = {}
    for v in range(g.n):
        open_groups.setdefault(g.adjacency[v], []).append(v)
        closed_groups.setdefault(g.adjacency[v] | bit(v), []).append(v)
    classes = []
    assigned = 0
    for members in open_groups.values():
        if len(members) > 1:
            classes.append(TwinClass(frozenset(members), "false"))
            assigned |= from_iter(members)
    for members in closed_groups.values():
        if len(members) > 1:
            classes.append(TwinClass(frozenset(members), "true"))
            assigned |= from_iter(members)
    for v in range(g.n):
        if not assigned >> v & 1:
            classes.append(TwinClass(frozenset([v]), "singleton"))
    classes.sort(key=lambda c: min(c.members))
    return classes


def split_partition_max_I(g: Graph) -> SplitPartition | None:
    """Split partition with the independent side as large as possible.

    Uses the degree-sequence characterization: with degrees sorted
    non-increasingly and k = max{i : d_i >= i-1}, the graph is split iff
    sum(d_1..d_k) == k(k-1) + sum(d_(k+1)..d_n), in which case the k
    highest-degree vertices form a clique and the rest an independent set.
    A single clique vertex with no independent-side neighbor may then move
    over, which is always enough to reach the maximum independent side.
    Returns None when the graph is not split. Ties break toward lower
    vertex indices, so the result is deterministic.
    """
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    k = max(i for i in range(1, n + 1) if degs[i - 1] >= i - 1)
    if sum(degs[:k]) != k * (k - 1) + sum(degs[k:]):
        return None
    clique = set(order[:k])
    indep = set(order[k:])
    indep_mask = from_iter(indep)
    for v in sorted(clique):
        if g.adjacency[v] & indep_mask == 0:
            clique.discard(v)
            indep.add(v)
            break
    return SplitPartition(frozenset(clique), frozenset(indep))


# ---------------------------------------------------------------------------
# Text format: "p edge <n> <m>" header, "e <u> <v>" lines (1-based), "c" comments.


def parse_graph(source: str | Path) -> Graph:
    """Parse the graph text format.

    A Path is read from disk; a str is treated as the text itself.
    Errors carry 1-based line/column positions.
    """
    text = source.read_text() if isinstance(source, Path) else source
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError("problem line must be 'p edge <n> <m>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError("problem line counts must be integers", lineno)
            if n < 0 or m < 0:
                raise ParseError("problem line counts must be nonnegative", lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(fields) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno)
            if not (1 <= u <= n):
                raise ParseError(f"vertex {u} out of range 1..{n}", lineno, raw.find(fields[1]) + 1)
            if not (1 <= v <= n):
                raise ParseError(f"vertex {v} out of range 1..{n}", lineno, raw.rfind(fields[2]) + 1)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge <n> <m>'", 1)
    if m != len(edges):
        raise ParseError(f"problem line announces {m} edges, found {len(edges)}", 1)
    g = graph_from_edges(n, edges)
    if len(g.edges()) != len(edges):
        raise ParseError("duplicate edge", 1)
    return g


def write_graph_text(g: Graph) -> str:
    """Canonical text form: header then sorted 'e u v' lines, 1-based."""
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"
