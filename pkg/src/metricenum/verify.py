"""Self-contained cross-check suite behind the `verify` subcommand.

Every check pits an enumeration path against the brute-force oracle or a
known identity on seeded random instances plus the bundled goldens, and
reports one (name, ok, detail) row.
"""

from __future__ import annotations

import itertools
import random

from .engine import (
    EngineChoice,
    SolutionStream,
    Ticker,
    enumerate_minimal_transversals,
    regularize_delay,
)
from .errors import PreconditionViolation
from .graphs import Graph, graph_from_edges, is_connected
from .hypergraphs import (
    Hypergraph,
    hypergraph_from_edges,
    pad_for_ext_resolving_reduction,
    pad_for_resolving_reduction,
    sperner_reduce,
)
from .metric import (
    enumerate_minimal_geodetic_sets,
    enumerate_minimal_resolving_sets,
    enumerate_minimal_strong_resolving_sets,
)
from .oracle import (
    brute_minimal_solutions,
    geodetic_predicate,
    resolving_predicate,
    strong_resolving_predicate,
    transversal_predicate,
)
from .reductions import (
    build_ext_geodetic_instance,
    build_ext_resolving_instance,
    ext_check,
    transenum_via_mingeodetic,
    transenum_via_minresolving,
)

H1_EDGES = [[0, 1], [1, 2, 3], [2, 4], [3, 4, 5, 6, 7]]
H2_EDGES = [[0, 1], [1, 2, 3], [2, 4], [3, 4, 5]]


def _random_connected(rng: random.Random, n: int) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = graph_from_edges(n, edges)
        if is_connected(g):
            return g


def _random_hypergraph(rng: random.Random, n: int, m: int) -> Hypergraph:
    edges = [rng.sample(range(n), rng.randint(1, n)) for _ in range(m)]
    return hypergraph_from_edges(n, edges)


def _canon(sets) -> list[tuple[int, ...]]:
    return sorted(tuple(sorted(s)) for s in sets)


def _check_engines(rng: random.Random) -> tuple[bool, str]:
    for _ in range(30):
        h = _random_hypergraph(rng, rng.randint(1, 7), rng.randint(1, 7))
        want = _canon(brute_minimal_solutions(transversal_predicate(h)))
        for engine in EngineChoice:
            got = _canon(enumerate_minimal_transversals(h, engine))
            if got != want:
                return False, f"{engine.value} disagrees with oracle on {h.edges}"
    return True, "30 random instances, both engines"


def _check_duality(rng: random.Random) -> tuple[bool, str]:
    for _ in range(20):
        h = sperner_reduce(_random_hypergraph(rng, rng.randint(1, 6), rng.randint(1, 5)))
        tr = _canon(enumerate_minimal_transversals(h))
        tr_h = hypergraph_from_edges(h.n, tr)
        back = _canon(enumerate_minimal_transversals(tr_h))
        if back != _canon(e for e in sperner_reduce(h).edge_sets()):
            return False, f"Tr(Tr(H)) != sperner(H) for {h.edges}"
    return True, "20 Sperner instances"


def _check_resolving(rng: random.Random) -> tuple[bool, str]:
    for _ in range(20):
        g = _random_connected(rng, rng.randint(2, 7))
        want = _canon(brute_minimal_solutions(resolving_predicate(g)))
        got = _canon(enumerate_minimal_resolving_sets(g))
        if got != want:
            return False, f"disagrees with oracle on {g.adjacency}"
    return True, "20 random connected graphs"


def _check_geodetic(rng: random.Random) -> tuple[bool, str]:
    for _ in range(20):
        g = _random_connected(rng, rng.randint(2, 7))
        want = _canon(brute_minimal_solutions(geodetic_predicate(g)))
        got = _canon(enumerate_minimal_geodetic_sets(g))
        if got != want:
            return False, f"disagrees with oracle on {g.adjacency}"
    return True, "20 random connected graphs"


def _check_strong(rng: random.Random) -> tuple[bool, str]:
    for _ in range(20):
        g = _random_connected(rng, rng.randint(2, 8))
        want = _canon(brute_minimal_solutions(strong_resolving_predicate(g)))
        got = _canon(enumerate_minimal_strong_resolving_sets(g))
        if got != want:
            return False, f"disagrees with oracle on {g.adjacency}"
    return True, "20 random connected graphs"


def _check_resolving_gadget(rng: random.Random) -> tuple[bool, str]:
    h = hypergraph_from_edges(8, H1_EDGES)
    stream = transenum_via_minresolving(h)
    got = _canon(stream)
    want = _canon(brute_minimal_solutions(transversal_predicate(h)))
    if got != want:
        return False, "decoded family differs from Tr"
    total = stream.info["garbage"] + stream.info["duplicates"] + len(got)
    expect = 4 * h.n * h.m * (len(want) + 2 * h.m)
    if total != expect:
        return False, f"{total} gadget solutions, expected {expect}"
    return True, f"{total} gadget solutions decode to {len(want)} transversals"


def _check_geodetic_gadget(rng: random.Random) -> tuple[bool, str]:
    h = hypergraph_from_edges(6, H2_EDGES)
    stream = transenum_via_mingeodetic(h)
    got = _canon(stream)
    want = _canon(brute_minimal_solutions(transversal_predicate(h)))
    if got != want:
        return False, "decoded family differs from Tr"
    if stream.info["garbage"] != h.m:
        return False, f"{stream.info['garbage']} garbage solutions, expected {h.m}"
    return True, f"{len(want) + h.m} gadget solutions decode to {len(want)} transversals"


def _check_ext(rng: random.Random) -> tuple[bool, str]:
    compared = 0
    for _ in range(15):
        n = rng.randint(1, 4)
        m = rng.randint(1, 3)
        h = _random_hypergraph(rng, n, m)
        verts = list(range(n))
        rng.shuffle(verts)
        ka = rng.randint(0, n)
        kb = rng.randint(0, n - ka)
        a, b = frozenset(verts[:ka]), frozenset(verts[ka : ka + kb])
        src = ext_check("transversal", h, a, b)
        try:
            inst = build_ext_geodetic_instance(h, a, b)
        except PreconditionViolation:
            inst = None
        if inst is not None:
            if ext_check("geodetic", inst).yes != src.yes:
                return False, f"geodetic gadget disagrees on {h.edges} {a} {b}"
            compared += 1
        hp, ap, bp = pad_for_ext_resolving_reduction(h, a, b)
        if ext_check("resolving", build_ext_resolving_instance(hp, ap, bp)).yes != src.yes:
            return False, f"resolving gadget disagrees on {h.edges} {a} {b}"
        compared += 1
    return True, f"{compared} gadget comparisons"


def _check_pads(rng: random.Random) -> tuple[bool, str]:
    done = 0
    while done < 15:
        h = sperner_reduce(_random_hypergraph(rng, rng.randint(2, 5), rng.randint(1, 4)))
        if any(e == h.full_mask() for e in h.edges):
            continue
        done += 1
        want = _canon(brute_minimal_solutions(transversal_predicate(h)))
        hp = pad_for_resolving_reduction(h)
        got = _canon(brute_minimal_solutions(transversal_predicate(hp)))
        if got != want:
            return False, f"resolving pad changed Tr for {h.edges}"
    return True, "15 instances, Tr preserved"


def _check_regularizer(rng: random.Random) -> tuple[bool, str]:
    for _ in range(40):
        ticker = Ticker()
        bursts = [(rng.randint(0, 30), rng.randint(0, 5)) for _ in range(rng.randint(1, 8))]
        budget = rng.randint(1, 10)

        def gen():
            v = 0
            for pre, count in bursts:
                ticker.tick(pre)
                for _ in range(count):
                    yield frozenset([v])
                    v += 1

        out = regularize_delay(SolutionStream(gen(), ticker), budget)
        got = list(out)
        total = sum(c for _, c in bursts)
        if got != [frozenset([v]) for v in range(total)]:
            return False, f"order or multiset broken for {bursts} budget {budget}"
    return True, "40 adversarial burst schedules"


CHECKS = (
    ("engine-agreement", _check_engines),
    ("transversal-duality", _check_duality),
    ("resolving-vs-oracle", _check_resolving),
    ("geodetic-vs-oracle", _check_geodetic),
    ("strong-resolving-vs-oracle", _check_strong),
    ("resolving-gadget-golden", _check_resolving_gadget),
    ("geodetic-gadget-golden", _check_geodetic_gadget),
    ("ext-gadget-agreement", _check_ext),
    ("pad-preserves-transversals", _check_pads),
    ("delay-regularizer", _check_regularizer),
)


def run_all(seed: int = 2718) -> list[tuple[str, bool, str]]:
    """Run every check on its own seeded generator; order is fixed."""
    results = []
    for name, fn in CHECKS:
        ok, detail = fn(random.Random(seed))
        results.append((name, ok, detail))
    return results
