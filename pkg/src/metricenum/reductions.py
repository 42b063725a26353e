"""Gadget graphs that carry transversal enumeration into metric problems.

Four builders produce tagged graphs: two full enumeration gadgets (resolving
and geodetic) whose minimal solutions decode back to minimal transversals of
the source hypergraph plus a known amount of garbage, and two extension
gadgets that preserve the yes/no answer of the constrained-search question.
Each builder freezes a vertex layout and records it in a role string per
vertex; decoders and renderers consume only the roles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .bitset import bit, from_iter, iter_bits
from .engine import SolutionStream, regularize_delay
from .errors import (
    DecodeFailure,
    DisconnectedError,
    EmptyEdgeError,
    PreconditionViolation,
    SizeLimitError,
    VerificationError,
)
from .graphs import Graph, all_pairs_distances, graph_from_edges, is_connected, on_shortest_path
from .hypergraphs import MINIMAL_TRANSVERSAL, Hypergraph, classify_transversal
from .metric import (
    MINIMAL,
    classify_geodetic,
    classify_resolving,
    distinguishing_hypergraph,
    enumerate_minimal_geodetic_sets,
    enumerate_minimal_resolving_sets,
)

RESOLVING = "resolving"
GEODETIC_SPLIT = "geodetic-split"
EXT_GEODETIC = "ext-geodetic"
EXT_RESOLVING = "ext-resolving"

GARBAGE_RESOLVING = "garbage-resolving"
TRANSVERSAL_RESOLVING = "transversal-resolving"
GARBAGE_GEODETIC = "garbage-geodetic"
TRANSVERSAL_GEODETIC = "transversal-geodetic"

EXT_KINDS = ("transversal", "geodetic", "resolving")


@dataclass(frozen=True)
class ReductionArtifact:
    """A gadget graph, one role string per vertex, and the encoded source."""

    kind: str
    graph: Graph
    roles: tuple[str, ...]
    source: Hypergraph

    def vertices_with_role(self, base: str) -> tuple[int, ...]:
        """Vertices whose role is `base` or `base` plus a numeric suffix.

        Bases with punctuation are distinct: "u" matches u1, u2, ... but
        never u'1 or u*1.
        """
        out = []
        for v, role in enumerate(self.roles):
            if role == base or (role.startswith(base) and role[len(base):].isdigit()):
                out.append(v)
        return tuple(out)


@dataclass(frozen=True)
class DecodedSolution:
    """Outcome of mapping a gadget solution back to the source hypergraph."""

    kind: str
    z: frozenset[int] | None = None
    garbage_vertex: int | None = None
    garbage_index: int | None = None
    transversal: frozenset[int] | None = None


@dataclass(frozen=True)
class ExtInstance:
    """Extension gadget: its graph plus the prescribed contain/avoid sets."""

    artifact: ReductionArtifact
    a_prime: frozenset[int]
    b_prime: frozenset[int]
    source_a: frozenset[int]
    source_b: frozenset[int]

    @property
    def graph(self) -> Graph:
        return self.artifact.graph

    @property
    def source(self) -> tuple[Hypergraph, frozenset[int], frozenset[int]]:
        return (self.artifact.source, self.source_a, self.source_b)


@dataclass(frozen=True)
class ExtAnswer:
    yes: bool
    witness: frozenset[int] | None = None


def _pow2(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def _code_positions(j: int) -> tuple[int, ...]:
    """1-based positions of the 1 bits in the binary expansion of j."""
    return tuple(k + 1 for k in iter_bits(j))


def _check_ext_sets(n: int, a: frozenset[int], b: frozenset[int]) -> None:
    if a & b:
        raise PreconditionViolation("a and b must be disjoint")
    if any(v not in range(n) for v in a | b):
        raise ValueError("a/b vertex out of range")


def build_minresolving_instance(h: Hypergraph) -> ReductionArtifact:
    """Encode transversal enumeration as resolving-set enumeration.

    Layout: V (one vertex per source vertex), H and H' (a pair per edge),
    U (false-twin pairs u_k/u'_k coding vertex numbers in binary), W
    (true-twin pairs w_k/w'_k coding edge numbers). Every minimal resolving
    set of the output is one choice per twin pair plus either a single
    H or H' vertex or a minimal transversal of the source inside V.
    """
    n, m = h.n, h.m
    if not (_pow2(n) and n > 2):
        raise PreconditionViolation("vertex count must be a power of two above 2")
    if not (_pow2(m) and m > 2):
        raise PreconditionViolation("edge count must be a power of two above 2")
    if h.has_empty_edge():
        raise EmptyEdgeError("empty edge")
    if any(e == h.full_mask() for e in h.edges):
        raise PreconditionViolation("an edge equal to the whole vertex set")
    for e, f in itertools.combinations(h.edges, 2):
        if e != f and (e & f == e or e & f == f):
            raise PreconditionViolation("one edge strictly contains another")

    p = n.bit_length()
    q = m.bit_length()
    v_ids = tuple(range(n))
    h_ids = tuple(range(n, n + m))
    h2_ids = tuple(range(n + m, n + 2 * m))
    u_base = n + 2 * m
    w_base = u_base + 2 * p
    total = w_base + 2 * q

    roles = [f"v{i + 1}" for i in range(n)]
    roles += [f"e{j + 1}" for j in range(m)]
    roles += [f"e'{j + 1}" for j in range(m)]
    for k in range(p):
        roles += [f"u{k + 1}", f"u'{k + 1}"]
    for k in range(q):
        roles += [f"w{k + 1}", f"w'{k + 1}"]

    u_all = tuple(range(u_base, w_base))
    w_all = tuple(range(w_base, total))
    edges: list[tuple[int, int]] = []
    edges.extend(itertools.combinations(v_ids, 2))
    edges.extend(itertools.combinations(h_ids, 2))
    edges.extend(itertools.combinations(h2_ids, 2))
    edges.extend((i, y) for i in v_ids for y in h2_ids)
    for j, x in enumerate(h_ids):
        for i in v_ids:
            if not h.edges[j] >> i & 1:
                edges.append((i, x))
    for x, y in itertools.combinations(u_all, 2):
        if not (y == x + 1 and (x - u_base) % 2 == 0):
            edges.append((x, y))
    for k in range(q):
        edges.append((w_base + 2 * k, w_base + 2 * k + 1))
    for i in v_ids:
        for k in _code_positions(i + 1):
            edges.append((i, u_base + 2 * (k - 1)))
            edges.append((i, u_base + 2 * (k - 1) + 1))
    for j in range(m):
        for k in _code_positions(j + 1):
            for x in (h_ids[j], h2_ids[j]):
                edges.append((x, w_base + 2 * (k - 1)))
                edges.append((x, w_base + 2 * (k - 1) + 1))
    edges.extend((x, y) for x in u_all for y in h_ids + h2_ids)
    edges.extend((i, y) for i in v_ids for y in w_all)

    return ReductionArtifact(RESOLVING, graph_from_edges(total, edges), tuple(roles), h)


def decode_minresolving_solution(
    artifact: ReductionArtifact, s: Iterable[int]
) -> DecodedSolution:
    """Map a minimal resolving set of the gadget back to the source.

    Every gadget solution carries exactly one vertex per twin pair; a set
    without that structure signals an upstream bug and raises DecodeFailure.
    """
    if artifact.kind != RESOLVING:
        raise ValueError(f"expected a {RESOLVING} artifact, got {artifact.kind}")
    s = frozenset(s)
    roles = artifact.roles
    pairs = itertools.chain(
        zip(artifact.vertices_with_role("u"), artifact.vertices_with_role("u'")),
        zip(artifact.vertices_with_role("w"), artifact.vertices_with_role("w'")),
    )
    z = set()
    for x, y in pairs:
        hit = {x, y} & s
        if len(hit) != 1:
            raise DecodeFailure(f"twin pair {roles[x]}/{roles[y]} not hit exactly once")
        z |= hit
    extras = s - z
    h_vertices = set(artifact.vertices_with_role("e"))
    h_vertices |= set(artifact.vertices_with_role("e'"))
    garbage = extras & h_vertices
    if garbage:
        if extras != garbage or len(garbage) != 1:
            raise DecodeFailure("garbage solution with more than one extra vertex")
        e = next(iter(garbage))
        return DecodedSolution(
            GARBAGE_RESOLVING,
            z=frozenset(z),
            garbage_vertex=e,
            garbage_index=int(roles[e].lstrip("e'")),
        )
    v_set = set(artifact.vertices_with_role("v"))
    if not extras or not extras <= v_set:
        raise DecodeFailure("solution is neither garbage nor a transversal image")
    return DecodedSolution(
        TRANSVERSAL_RESOLVING, z=frozenset(z), transversal=frozenset(extras)
    )


def transenum_via_minresolving(
    h: Hypergraph,
    resolver: SolutionStream | None = None,
    budget: int | None = None,
) -> SolutionStream:
    """Enumerate Tr(h) by decoding minimal resolving sets of the gadget.

    Each transversal appears once per twin choice, 4nm times in total, so
    a dedup set keeps first occurrences; garbage and duplicate counts land
    in the stream info. Output goes through regularize_delay with the given
    tick budget (default 4nm, the duplication factor).
    """
    artifact = build_minresolving_instance(h)
    if resolver is None:
        resolver = enumerate_minimal_resolving_sets(artifact.graph)
    if budget is None:
        budget = 4 * h.n * h.m
    info = resolver.info
    info.setdefault("garbage", 0)
    info.setdefault("duplicates", 0)
    seen: set[frozenset[int]] = set()

    def gen():
        for s in resolver:
            decoded = decode_minresolving_solution(artifact, s)
            if decoded.kind == GARBAGE_RESOLVING:
                info["garbage"] += 1
                continue
            t = decoded.transversal
            if t in seen:
                info["duplicates"] += 1
                continue
            seen.add(t)
            yield t

    inner = SolutionStream(gen(), resolver._ticker, info=info)
    return regularize_delay(inner, budget)


def build_mingeodetic_instance(h: Hypergraph) -> ReductionArtifact:
    """Encode transversal enumeration as geodetic-set enumeration.

    Output is a split graph: clique side U cup V cup {u*}, independent side
    H cup {e*}. The independent side sits in every geodetic set; solutions
    add either a single u_j (garbage) or a minimal transversal inside V.
    """
    n, m = h.n, h.m
    if n < 1 or m < 1:
        raise PreconditionViolation("at least one vertex and one edge required")
    shared = h.full_mask()
    for e in h.edges:
        shared &= e
    if shared:
        raise PreconditionViolation("universal vertex (in every edge); peel it first")

    v_ids = tuple(range(n))
    h_ids = tuple(range(n, n + m))
    u_ids = tuple(range(n + m, n + 2 * m))
    e_star = n + 2 * m
    u_star = e_star + 1
    total = u_star + 1

    roles = [f"v{i + 1}" for i in range(n)]
    roles += [f"e{j + 1}" for j in range(m)]
    roles += [f"u{j + 1}" for j in range(m)]
    roles += ["e*", "u*"]

    edges: list[tuple[int, int]] = []
    for j, x in enumerate(h_ids):
        for i in v_ids:
            if not h.edges[j] >> i & 1:
                edges.append((i, x))
        edges.append((u_ids[j], x))
    edges.extend(itertools.combinations(v_ids + u_ids, 2))
    edges.extend((i, e_star) for i in v_ids)
    edges.extend((x, u_star) for x in range(u_star))

    return ReductionArtifact(GEODETIC_SPLIT, graph_from_edges(total, edges), tuple(roles), h)


def decode_mingeodetic_solution(
    artifact: ReductionArtifact, s: Iterable[int]
) -> DecodedSolution:
    """Map a minimal geodetic set of the split gadget back to the source."""
    if artifact.kind != GEODETIC_SPLIT:
        raise ValueError(f"expected a {GEODETIC_SPLIT} artifact, got {artifact.kind}")
    s = frozenset(s)
    mandatory = set(artifact.vertices_with_role("e"))
    mandatory |= set(artifact.vertices_with_role("e*"))
    if not mandatory <= s:
        raise DecodeFailure("independent side not contained in the solution")
    extras = s - mandatory
    u_ids = artifact.vertices_with_role("u")
    if len(extras) == 1 and next(iter(extras)) in u_ids:
        u = next(iter(extras))
        return DecodedSolution(
            GARBAGE_GEODETIC, garbage_vertex=u, garbage_index=u_ids.index(u) + 1
        )
    v_set = set(artifact.vertices_with_role("v"))
    if not extras or not extras <= v_set:
        raise DecodeFailure("solution is neither garbage nor a transversal image")
    return DecodedSolution(TRANSVERSAL_GEODETIC, transversal=frozenset(extras))


def transenum_via_mingeodetic(
    h: Hypergraph,
    geodetic_stream: SolutionStream | None = None,
) -> SolutionStream:
    """Enumerate Tr(h) by decoding minimal geodetic sets of the split gadget.

    At most m garbage solutions exist and decoded transversals are already
    distinct, so there is no dedup set and no regularization; garbage is
    counted in the stream info.
    """
    artifact = build_mingeodetic_instance(h)
    if geodetic_stream is None:
        geodetic_stream = enumerate_minimal_geodetic_sets(artifact.graph)
    info = geodetic_stream.info
    info.setdefault("garbage", 0)

    def gen():
        for s in geodetic_stream:
            decoded = decode_mingeodetic_solution(artifact, s)
            if decoded.kind == GARBAGE_GEODETIC:
                info["garbage"] += 1
                continue
            yield decoded.transversal

    return SolutionStream(gen(), geodetic_stream._ticker, info=info)


def build_ext_geodetic_instance(
    h: Hypergraph, a: Iterable[int], b: Iterable[int]
) -> ExtInstance:
    """Encode the transversal extension question as a geodetic one.

    The gadget joins the incidence graph of h (both sides completed to
    cliques) with three connectors a, b, c. A minimal transversal
    containing A and avoiding B exists iff a minimal geodetic set
    containing A' = A+{a,b,c} and avoiding B' = B+H exists.
    """
    a = frozenset(a)
    b = frozenset(b)
    n, m = h.n, h.m
    _check_ext_sets(n, a, b)
    if n < 1 or m < 1:
        raise PreconditionViolation("at least one vertex and one edge required")
    if classify_transversal(h, range(n)).kind == MINIMAL_TRANSVERSAL:
        raise PreconditionViolation("the whole vertex set is a minimal transversal")

    v_ids = tuple(range(n))
    h_ids = tuple(range(n, n + m))
    va, vb, vc = n + m, n + m + 1, n + m + 2
    total = n + m + 3

    roles = [f"v{i + 1}" for i in range(n)]
    roles += [f"e{j + 1}" for j in range(m)]
    roles += ["a", "b", "c"]

    edges: list[tuple[int, int]] = []
    for j, x in enumerate(h_ids):
        for i in v_ids:
            if h.edges[j] >> i & 1:
                edges.append((i, x))
    edges.extend(itertools.combinations(v_ids, 2))
    edges.extend(itertools.combinations(h_ids, 2))
    edges.extend((x, va) for x in h_ids)
    edges.append((va, vb))
    edges.append((va, vc))
    edges.extend((i, vb) for i in v_ids)
    edges.extend((x, vc) for x in h_ids)
    edges.extend((i, vc) for i in v_ids)

    artifact = ReductionArtifact(EXT_GEODETIC, graph_from_edges(total, edges), tuple(roles), h)
    return ExtInstance(
        artifact,
        a_prime=a | {va, vb, vc},
        b_prime=b | frozenset(h_ids),
        source_a=a,
        source_b=b,
    )


def build_ext_resolving_instance(
    h: Hypergraph, a: Iterable[int], b: Iterable[int]
) -> ExtInstance:
    """Encode the transversal extension question as a resolving one.

    Needs the padded shape: n+1 and m+1 powers of two, both counts at
    least 3 (each bit position needs two codes differing in it alone),
    and the last edge equal to the singleton of the last vertex. A minimal
    transversal
    containing A and avoiding B exists iff a minimal resolving set
    containing A' = A+U+W and avoiding B' = B+U'+U*+H+H' exists.
    """
    a = frozenset(a)
    b = frozenset(b)
    n, m = h.n, h.m
    _check_ext_sets(n, a, b)
    if n < 3 or m < 3:
        raise PreconditionViolation("at least three vertices and three edges required")
    if not _pow2(n + 1):
        raise PreconditionViolation("vertex count plus one must be a power of two")
    if not _pow2(m + 1):
        raise PreconditionViolation("edge count plus one must be a power of two")
    if h.edges[-1] != bit(n - 1):
        raise PreconditionViolation("last edge must be the singleton of the last vertex")
    if n - 1 in b:
        raise PreconditionViolation("the last vertex cannot be avoided")

    big_l = (n + 1).bit_length() - 1
    big_m = (m + 1).bit_length() - 1
    v_ids = tuple(range(n))
    h_ids = tuple(range(n, n + m))
    h2_ids = tuple(range(n + m, n + 2 * m))
    u_base = n + 2 * m
    u2_base = u_base + big_l
    us_base = u2_base + big_l
    w_base = us_base + n
    total = w_base + big_m

    roles = [f"v{i + 1}" for i in range(n)]
    roles += [f"e{j + 1}" for j in range(m)]
    roles += [f"e'{j + 1}" for j in range(m)]
    roles += [f"u{k + 1}" for k in range(big_l)]
    roles += [f"u'{k + 1}" for k in range(big_l)]
    roles += [f"u*{i + 1}" for i in range(n)]
    roles += [f"w{k + 1}" for k in range(big_m)]

    edges: list[tuple[int, int]] = []
    for j, x in enumerate(h_ids):
        for i in v_ids:
            if not h.edges[j] >> i & 1:
                edges.append((i, x))
    edges.extend((i, y) for i in v_ids for y in h2_ids)
    for i in v_ids:
        for k in _code_positions(i + 1):
            edges.append((i, u2_base + k - 1))
    for j in range(m):
        for k in _code_positions(j + 1):
            edges.append((h_ids[j], w_base + k - 1))
            edges.append((h2_ids[j], w_base + k - 1))
    for i in range(n):
        for k in _code_positions(i + 1):
            edges.append((us_base + i, u_base + k - 1))
    for k in range(big_l):
        edges.append((u_base + k, u2_base + k))
    clique = tuple(range(u2_base, us_base + n)) + h_ids + h2_ids
    edges.extend(itertools.combinations(sorted(clique), 2))

    artifact = ReductionArtifact(EXT_RESOLVING, graph_from_edges(total, edges), tuple(roles), h)
    a_prime = a | frozenset(range(u_base, u2_base)) | frozenset(range(w_base, total))
    b_prime = b | frozenset(range(u2_base, us_base + n))
    b_prime |= frozenset(h_ids) | frozenset(h2_ids)
    return ExtInstance(artifact, a_prime=a_prime, b_prime=b_prime, source_a=a, source_b=b)


def _private_constraint_checker(masks: tuple[int, ...]) -> Callable[[int], bool]:
    """Minimal-transversal test over constraint masks.

    A set is a solution when every mask is hit, and minimal when every
    member hits some mask alone.
    """

    def check(s_mask: int) -> bool:
        for e in masks:
            if not e & s_mask:
                return False
        needed = s_mask
        for e in masks:
            hit = e & s_mask
            if hit & (hit - 1) == 0:
                needed &= ~hit
                if not needed:
                    return True
        return not needed

    return check


def _geodetic_checker(g: Graph) -> Callable[[int], bool]:
    """Minimal-geodetic test; minimality by remove-and-recheck."""
    if not is_connected(g):
        raise DisconnectedError("geodetic extension needs a connected graph")
    d = all_pairs_distances(g)
    cover: list[list[int]] = []
    for v in range(g.n):
        masks = [bit(v)]
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if v not in (x, y) and on_shortest_path(d, x, v, y):
                    masks.append(bit(x) | bit(y))
        cover.append(masks)

    def covered(s_mask: int) -> bool:
        for masks in cover:
            if not any(pm & s_mask == pm for pm in masks):
                return False
        return True

    def check(s_mask: int) -> bool:
        if not covered(s_mask):
            return False
        rest = s_mask
        while rest:
            vbit = rest & -rest
            if covered(s_mask & ~vbit):
                return False
            rest ^= vbit
        return True

    return check


def ext_check(
    kind: str,
    subject: Hypergraph | Graph | ExtInstance,
    a: Iterable[int] | None = None,
    b: Iterable[int] | None = None,
    size_limit: int = 24,
) -> ExtAnswer:
    """Decide whether a minimal solution containing a and avoiding b exists.

    kind picks the predicate: "transversal" over a Hypergraph, "geodetic"
    or "resolving" over a Graph. An ExtInstance supplies its own graph and
    prescribed sets. The scan runs over subsets of the free vertices in
    ascending size, so the witness is the lexicographically first smallest
    one; it is re-verified against the public classifier before returning.
    """
    if kind not in EXT_KINDS:
        raise ValueError(f"unknown extension kind: {kind!r}")
    if isinstance(subject, ExtInstance):
        if a is None:
            a = subject.a_prime
        if b is None:
            b = subject.b_prime
        subject = subject.graph
    a = frozenset(a) if a is not None else frozenset()
    b = frozenset(b) if b is not None else frozenset()

    if kind == "transversal":
        if not isinstance(subject, Hypergraph):
            raise TypeError("transversal extension needs a hypergraph")
        ground = subject.n
        check = _private_constraint_checker(subject.edges)
        accept = lambda s: classify_transversal(subject, s).kind == MINIMAL_TRANSVERSAL
    elif kind == "resolving":
        if not isinstance(subject, Graph):
            raise TypeError("resolving extension needs a graph")
        ground = subject.n
        check = _private_constraint_checker(distinguishing_hypergraph(subject).edges)
        accept = lambda s: classify_resolving(subject, s).kind == MINIMAL
    else:
        if not isinstance(subject, Graph):
            raise TypeError("geodetic extension needs a graph")
        ground = subject.n
        check = _geodetic_checker(subject)
        accept = lambda s: classify_geodetic(subject, s).kind == MINIMAL

    _check_ext_sets(ground, a, b)
    free = sorted(set(range(ground)) - a - b)
    if len(free) > size_limit:
        raise SizeLimitError(f"{len(free)} free vertices exceed the limit of {size_limit}")
    a_mask = from_iter(a)
    for size in range(len(free) + 1):
        for combo in itertools.combinations(free, size):
            s_mask = a_mask | from_iter(combo)
            if check(s_mask):
                witness = frozenset(a | set(combo))
                if not accept(witness):
                    raise VerificationError("subset scan and classifier disagree")
                return ExtAnswer(True, witness)
    return ExtAnswer(False, None)


_ROLE_COLORS = {
    "v": "lightblue",
    "e": "lightyellow",
    "e'": "khaki",
    "e*": "gold",
    "u": "lightpink",
    "u'": "pink",
    "u*": "plum",
    "w": "lightgreen",
    "w'": "palegreen",
    "a": "lightgray",
    "b": "lightgray",
    "c": "lightgray",
}


def _role_color(role: str) -> str:
    return _ROLE_COLORS.get(role.rstrip("0123456789"), "white")


def write_roles_text(artifact: ReductionArtifact) -> str:
    """Role sidecar: one `<vertex> <role>` line per vertex, ids 1-based."""
    return "".join(f"{v + 1} {role}\n" for v, role in enumerate(artifact.roles))


def write_dot(artifact: ReductionArtifact) -> str:
    """GraphViz source with vertices labelled and colored by role."""
    lines = [
        "graph gadget {",
        f"  // kind: {artifact.kind}",
        "  // colors: v=lightblue e=lightyellow e'=khaki e*=gold u=lightpink",
        "  //         u'=pink u*=plum w=lightgreen w'=palegreen a/b/c=lightgray",
        "  node [style=filled];",
    ]
    for v, role in enumerate(artifact.roles):
        lines.append(f'  {v + 1} [label="{role}", fillcolor="{_role_color(role)}"];')
    for x, y in artifact.graph.edges():
        lines.append(f"  {x + 1} -- {y + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
