"""Hypergraphs on a 0-based universe, with the preprocessing the reductions need.

Edges keep their order (edge indices are meaningful to the engines and the
gadget builders) and are stored as int bitsets. An empty edge is legal but
makes the instance transversal-free; enumeration entry points report it
instead of silently yielding nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .bitset import bit, from_iter, iter_bits, to_frozenset
from .errors import EmptyEdgeError, ParseError, PreconditionViolation

__all__ = [
    "Hypergraph",
    "TransversalClass",
    "NOT_TRANSVERSAL",
    "TRANSVERSAL_NOT_MINIMAL",
    "MINIMAL_TRANSVERSAL",
    "hypergraph_from_edges",
    "classify_transversal",
    "sperner_reduce",
    "peel_universal_vertices",
    "reconstruct_peeled",
    "pad_for_resolving_reduction",
    "pad_for_ext_resolving_reduction",
    "parse_hypergraph",
    "write_hypergraph_text",
]

NOT_TRANSVERSAL = "not-transversal"
TRANSVERSAL_NOT_MINIMAL = "transversal-not-minimal"
MINIMAL_TRANSVERSAL = "minimal-transversal"


@dataclass(frozen=True)
class Hypergraph:
    """Universe 0..n-1; edges is an ordered tuple of int bitsets."""

    n: int
    edges: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_sets(self) -> list[frozenset[int]]:
        return [to_frozenset(e) for e in self.edges]

    def has_empty_edge(self) -> bool:
        return any(e == 0 for e in self.edges)

    def full_mask(self) -> int:
        return (1 << self.n) - 1


@dataclass(frozen=True)
class TransversalClass:
    """Classification of a vertex set against a hypergraph.

    kind NOT_TRANSVERSAL: missed_edge is the lowest uncovered edge index.
    kind TRANSVERSAL_NOT_MINIMAL: removable is the lowest droppable vertex.
    kind MINIMAL_TRANSVERSAL: private_edges pairs each member with the lowest
    edge index that only this member hits.
    """

    kind: str
    missed_edge: int | None = None
    removable: int | None = None
    private_edges: tuple[tuple[int, int], ...] = ()


def hypergraph_from_edges(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Build a Hypergraph; edge order is preserved, vertices validated."""
    if n < 0:
        raise ValueError("universe size must be nonnegative")
    masks = []
    for idx, edge in enumerate(edges):
        mask = 0
        for v in edge:
            if not 0 <= v < n:
                raise ValueError(f"edge {idx} vertex {v} out of range for n={n}")
            mask |= bit(v)
        masks.append(mask)
    return Hypergraph(n, tuple(masks))


def classify_transversal(h: Hypergraph, t: Iterable[int]) -> TransversalClass:
    """Classify t as non-transversal, non-minimal, or minimal with witnesses."""
    t_mask = 0
    for v in t:
        if not 0 <= v < h.n:
            raise ValueError(f"vertex {v} out of range for n={h.n}")
        t_mask |= bit(v)
    for idx, e in enumerate(h.edges):
        if e & t_mask == 0:
            return TransversalClass(NOT_TRANSVERSAL, missed_edge=idx)
    privates = []
    for v in iter_bits(t_mask):
        vb = bit(v)
        witness = next((i for i, e in enumerate(h.edges) if e & t_mask == vb), None)
        if witness is None:
            return TransversalClass(TRANSVERSAL_NOT_MINIMAL, removable=v)
        privates.append((v, witness))
    return TransversalClass(MINIMAL_TRANSVERSAL, private_edges=tuple(privates))


def sperner_reduce(h: Hypergraph) -> Hypergraph:
    """Keep only inclusion-minimal edges, deduplicated, first occurrences first.

    Minimal transversals are invariant under this reduction.
    """
    kept: list[int] = []
    for i, e in enumerate(h.edges):
        if any(f != e and f & e == f for f in h.edges):
            continue
        if e in kept:
            continue
        kept.append(e)
    return Hypergraph(h.n, tuple(kept))


def peel_universal_vertices(h: Hypergraph) -> tuple[Hypergraph, list[int]]:
    """Strip vertices contained in every edge, one at a time.

    Returns (residual, peeled). Each peel removes the lowest-index vertex
    present in all edges; an edge that becomes empty stays in the residual
    (such a residual is transversal-free, which is exactly what makes the
    reconstruction below exact). Hypergraphs with no edges are not peeled.
    """
    edges = list(h.edges)
    peeled: list[int] = []
    while edges:
        common = edges[0]
        for e in edges[1:]:
            common &= e
        if common == 0:
            break
        v = (common & -common).bit_length() - 1
        peeled.append(v)
        edges = [e & ~bit(v) for e in edges]
    return Hypergraph(h.n, tuple(edges)), peeled


def reconstruct_peeled(
    peeled: Sequence[int], residual_transversals: Iterable[frozenset[int]]
) -> list[frozenset[int]]:
    """Minimal transversals of the original instance from a peel's residual.

    Every peeled vertex was universal at its peel step, so each {v} is a
    minimal transversal, and every minimal transversal avoiding v is one of
    the residual. Singletons come first, in peel order.
    """
    out = [frozenset([v]) for v in peeled]
    out.extend(residual_transversals)
    return out


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def _check_strict_sperner(h: Hypergraph) -> None:
    seen = set()
    for e in h.edges:
        if e in seen:
            raise PreconditionViolation("duplicate edge violates the Sperner assumption")
        seen.add(e)
    for e in h.edges:
        if any(f != e and f & e == f for f in h.edges):
            raise PreconditionViolation("edge contains another edge, violating the Sperner assumption")


def pad_for_resolving_reduction(h: Hypergraph) -> Hypergraph:
    """Pad a Sperner instance so vertex and edge counts are powers of two > 2.

    Vertex padding appends isolated vertices (in no edge); edge padding
    duplicates the first edge. Neither changes the minimal transversals as
    subsets of the original universe. Rejects instances with an empty edge,
    with no edge, or with an edge equal to the full universe (the gadget
    construction has no safe room for those).
    """
    if h.m == 0:
        raise PreconditionViolation("at least one edge required")
    if h.has_empty_edge():
        raise EmptyEdgeError("empty edge cannot be padded")
    if any(e == h.full_mask() for e in h.edges):
        raise PreconditionViolation("an edge equals the full universe (cannot pad safely)")
    _check_strict_sperner(h)
    n = h.n
    target_n = 4
    while target_n < n:
        target_n *= 2
    target_m = 4
    while target_m < h.m:
        target_m *= 2
    edges = list(h.edges)
    edges.extend([h.edges[0]] * (target_m - h.m))
    return Hypergraph(target_n, tuple(edges))


def pad_for_ext_resolving_reduction(
    h: Hypergraph, a: frozenset[int], b: frozenset[int]
) -> tuple[Hypergraph, frozenset[int], frozenset[int]]:
    """Pad (h, a, b) into the shape the extension gadget requires.

    Target shape: n and m both at least 3 with log2(n+1) and log2(m+1)
    integral, the last edge is the singleton of the last vertex, and that
    vertex is outside b. Sizes 1 are excluded because the gadget needs two
    binary codes per bit position that differ in that bit alone. Each dummy
    vertex is carried by its own singleton edge (so it joins every minimal
    transversal and changes nothing else); when more edges than vertices
    are needed, the first dummy singleton is repeated, so whenever at least
    two dummies are added the final vertex stays exclusive to the final
    edge. a and b are returned unchanged; the extension answer is
    preserved.
    """
    if a & b:
        raise PreconditionViolation("a and b must be disjoint")
    universe = range(h.n)
    if any(v not in universe for v in a | b):
        raise ValueError("a/b vertex out of range")
    n, m = h.n, h.m
    conforming = (
        n >= 3
        and m >= 3
        and _is_power_of_two(n + 1)
        and _is_power_of_two(m + 1)
        and h.edges[-1] == bit(n - 1)
        and (n - 1) not in b
    )
    if conforming:
        return h, a, b
    p = 1
    while not (n + p >= 3 and _is_power_of_two(n + p + 1)):
        p += 1
    q = p
    while not (m + q >= 3 and _is_power_of_two(m + q + 1)):
        q += 1
    edges = list(h.edges)
    edges.extend([bit(n)] * (q - p))
    edges.extend(bit(n + i) for i in range(p))
    return Hypergraph(n + p, tuple(edges)), a, b


# ---------------------------------------------------------------------------
# Text format (.hg): optional "p hg <n> <m>" header, one edge per line of
# 1-based indices, "#" comments. Edge order is significant.


def parse_hypergraph(source: str | Path) -> Hypergraph:
    """Parse the .hg format; a Path reads a file, a str is the text itself.

    With a header, exactly m edge lines follow and a blank line among them is
    an empty edge; without a header the universe is the largest index seen
    and blank lines are skipped.
    """
    text = source.read_text() if isinstance(source, Path) else source
    lines = text.splitlines()
    header: tuple[int, int] | None = None
    edges: list[list[int]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            continue
        if stripped.startswith("p ") or stripped == "p":
            if header is not None:
                raise ParseError("duplicate header line", lineno)
            if edges:
                raise ParseError("header must precede edges", lineno)
            fields = stripped.split()
            if len(fields) != 4 or fields[1] != "hg":
                raise ParseError("header must be 'p hg <n> <m>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno)
            if n < 0 or m < 0:
                raise ParseError("header counts must be nonnegative", lineno)
            header = (n, m)
            continue
        if not stripped:
            if header is not None and len(edges) < header[1]:
                edges.append([])
            continue
        vertices = []
        for field in stripped.split():
            try:
                v = int(field)
            except ValueError:
                raise ParseError(f"bad vertex {field!r}", lineno, raw.find(field) + 1)
            if v < 1:
                raise ParseError(f"vertex {v} must be positive", lineno, raw.find(field) + 1)
            if header is not None and v > header[0]:
                raise ParseError(f"vertex {v} out of range 1..{header[0]}", lineno, raw.find(field) + 1)
            if v - 1 in vertices:
                raise ParseError(f"vertex {v} repeated within the edge", lineno)
            vertices.append(v - 1)
        edges.append(vertices)
    if header is not None:
        n, m = header
        if len(edges) != m:
            raise ParseError(f"header announces {m} edges, found {len(edges)}", 1)
    else:
        n = max((v + 1 for e in edges for v in e), default=0)
    return hypergraph_from_edges(n, edges)


def write_hypergraph_text(h: Hypergraph) -> str:
    """Canonical .hg form: header, then one ascending 1-based edge per line."""
    lines = [f"p hg {h.n} {h.m}"]
    for e in h.edges:
        lines.append(" ".join(str(v + 1) for v in iter_bits(e)))
    return "\n".join(lines) + "\n"
