import itertools
import random

import pytest

from helpers import (
    canon,
    complete,
    cycle,
    path,
    random_connected,
    star,
    triangle_pendant,
)
from metricenum.errors import (
    DisconnectedError,
    PreconditionViolation,
    SizeLimitError,
    TrivialInstanceError,
)
from metricenum.engine import enumerate_minimal_transversals
from metricenum.graphs import SplitPartition, graph_from_edges, split_partition_max_I, twin_classes
from metricenum.metric import (
    MINIMAL,
    NOT_SOLUTION,
    SOLUTION_NOT_MINIMAL,
    classify_geodetic,
    classify_resolving,
    classify_strong_resolving,
    distinguishing_hypergraph,
    enumerate_minimal_geodetic_sets,
    enumerate_minimal_resolving_sets,
    enumerate_minimal_strong_resolving_sets,
    is_consistent,
    mmd_graph,
    pair_cover_hypergraph,
    split_geodetic_hypergraph,
)
from metricenum.oracle import (
    brute_minimal_solutions,
    geodetic_predicate,
    resolving_predicate,
    strong_resolving_predicate,
)


def test_distinguishing_hypergraph_on_path():
    h = distinguishing_hypergraph(path(3))
    assert h.edge_sets() == [
        frozenset({0, 1, 2}), frozenset({0, 2}), frozenset({0, 1, 2}),
    ]


def test_distinguishing_hypergraph_handles_disconnection():
    h = distinguishing_hypergraph(graph_from_edges(3, [(0, 1)]))
    assert all(e for e in h.edges)


def test_resolving_goldens():
    assert canon(enumerate_minimal_resolving_sets(path(3))) == [(0,), (2,)]
    assert canon(enumerate_minimal_resolving_sets(complete(4))) == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
    ]
    assert canon(enumerate_minimal_resolving_sets(cycle(4))) == canon(
        brute_minimal_solutions(resolving_predicate(cycle(4)))
    )


def _expected_kind(pred, s):
    mask = sum(1 << v for v in s)
    if not pred.evaluate(mask):
        return NOT_SOLUTION
    if any(pred.evaluate(mask & ~(1 << v)) for v in s):
        return SOLUTION_NOT_MINIMAL
    return MINIMAL


def test_classify_resolving_exhaustive():
    for g in (path(4), triangle_pendant(), cycle(5)):
        pred = resolving_predicate(g)
        for r in range(g.n + 1):
            for s in itertools.combinations(range(g.n), r):
                assert classify_resolving(g, s).kind == _expected_kind(pred, s)


def test_resolving_sets_hit_every_twin_class():
    # Omitting two members of one twin class leaves that pair unresolved.
    rng = random.Random(21)
    for _ in range(30):
        g = random_connected(rng, rng.randint(2, 8))
        for cls in twin_classes(g):
            if len(cls.members) < 2:
                continue
            rest = frozenset(range(g.n)) - cls.members
            got = classify_resolving(g, rest)
            assert got.kind == NOT_SOLUTION
            assert frozenset(got.witness) <= cls.members


def test_geodetic_complete_graph():
    stream = enumerate_minimal_geodetic_sets(complete(4))
    assert list(stream) == [frozenset({0, 1, 2, 3})]
    assert stream.info["engine"] == "complete"


def test_geodetic_split_route():
    stream = enumerate_minimal_geodetic_sets(triangle_pendant())
    sols = list(stream)
    assert stream.info.get("path") == "split"
    assert canon(sols) == [(0, 1, 3)]
    assert canon(enumerate_minimal_geodetic_sets(star(4))) == [(1, 2, 3, 4)]
    assert canon(enumerate_minimal_geodetic_sets(path(4))) == [(0, 3)]


def test_geodetic_scan_route():
    stream = enumerate_minimal_geodetic_sets(cycle(4))
    sols = list(stream)
    assert stream.info["engine"] == "subset-scan"
    assert canon(sols) == [(0, 2), (1, 3)]
    assert canon(enumerate_minimal_geodetic_sets(cycle(5))) == canon(
        brute_minimal_solutions(geodetic_predicate(cycle(5)))
    )


def test_geodetic_rejects_bad_inputs():
    with pytest.raises(DisconnectedError):
        enumerate_minimal_geodetic_sets(graph_from_edges(3, [(0, 1)]))
    with pytest.raises(SizeLimitError):
        enumerate_minimal_geodetic_sets(cycle(21))


def test_geodetic_size_limit_override():
    got = canon(enumerate_minimal_geodetic_sets(cycle(6), size_limit=6))
    assert got == canon(brute_minimal_solutions(geodetic_predicate(cycle(6))))


def test_classify_geodetic_exhaustive():
    for g in (path(4), triangle_pendant(), cycle(5)):
        pred = geodetic_predicate(g)
        for r in range(g.n + 1):
            for s in itertools.combinations(range(g.n), r):
                assert classify_geodetic(g, s).kind == _expected_kind(pred, s)


def test_pair_cover_hypergraph_on_path():
    ph = pair_cover_hypergraph(path(3))
    assert ph.pairs == ((0, 1), (0, 2), (1, 2))
    assert ph.edges == (
        frozenset({(0, 1), (0, 2)}),
        frozenset({(0, 1), (0, 2), (1, 2)}),
        frozenset({(0, 2), (1, 2)}),
    )
    assert ph.as_hypergraph().edge_sets() == [
        frozenset({0, 1}), frozenset({0, 1, 2}), frozenset({1, 2}),
    ]


def test_is_consistent():
    assert is_consistent([])
    assert is_consistent([(0, 1)])
    assert is_consistent([(0, 1), (0, 2), (1, 2)])
    assert not is_consistent([(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        is_consistent([(1, 1)])


def test_split_geodetic_hypergraph_matches_enumerator():
    g = triangle_pendant()
    p = split_partition_max_I(g)
    mandatory, sub = split_geodetic_hypergraph(g, p)
    assert mandatory == p.independent
    combined = canon(mandatory | t for t in enumerate_minimal_transversals(sub))
    assert combined == canon(brute_minimal_solutions(geodetic_predicate(g)))


def test_split_geodetic_hypergraph_preconditions():
    g = triangle_pendant()
    with pytest.raises(PreconditionViolation):
        split_geodetic_hypergraph(g, SplitPartition(frozenset({0, 1}), frozenset({2, 3})))
    with pytest.raises(TrivialInstanceError):
        split_geodetic_hypergraph(
            complete(3), SplitPartition(frozenset({0, 1}), frozenset({2}))
        )
    # A non-maximum independent side leaves an uncovered clique vertex with
    # no independent neighbor.
    with pytest.raises(PreconditionViolation):
        split_geodetic_hypergraph(
            star(3), SplitPartition(frozenset({0, 3}), frozenset({1, 2}))
        )


def test_mmd_graph_goldens():
    assert mmd_graph(path(3)).edges() == [(0, 2)]
    assert mmd_graph(path(4)).edges() == [(0, 3)]
    assert mmd_graph(cycle(4)).edges() == [(0, 2), (1, 3)]
    assert mmd_graph(complete(4)).edges() == complete(4).edges()


def test_strong_resolving_goldens():
    assert canon(enumerate_minimal_strong_resolving_sets(path(3))) == [(0,), (2,)]
    assert canon(enumerate_minimal_strong_resolving_sets(cycle(4))) == [
        (0, 1), (0, 3), (1, 2), (2, 3),
    ]
    assert canon(enumerate_minimal_strong_resolving_sets(complete(4))) == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
    ]


def test_strong_resolving_matches_oracle():
    rng = random.Random(31)
    for _ in range(30):
        g = random_connected(rng, rng.randint(2, 8))
        assert canon(enumerate_minimal_strong_resolving_sets(g)) == canon(
            brute_minimal_solutions(strong_resolving_predicate(g))
        )


def test_classify_strong_resolving_exhaustive():
    for g in (path(4), cycle(5), star(3)):
        pred = strong_resolving_predicate(g)
        for r in range(g.n + 1):
            for s in itertools.combinations(range(g.n), r):
                assert classify_strong_resolving(g, s).kind == _expected_kind(pred, s)
