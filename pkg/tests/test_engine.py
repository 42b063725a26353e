import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import H2_TRANSVERSALS, canon, h2, random_connected, random_hypergraph
from metricenum.engine import (
    EngineChoice,
    SolutionStream,
    Ticker,
    enumerate_maximal_independent_sets,
    enumerate_minimal_transversals,
    enumerate_minimal_vertex_covers,
    regularize_delay,
)
from metricenum.errors import EmptyEdgeError
from metricenum.hypergraphs import hypergraph_from_edges, sperner_reduce
from metricenum.oracle import brute_minimal_solutions, transversal_predicate


def test_golden_transversals_both_engines():
    for engine in EngineChoice:
        assert canon(enumerate_minimal_transversals(h2(), engine)) == H2_TRANSVERSALS


def test_engine_accepts_string_names():
    assert canon(enumerate_minimal_transversals(h2(), "berge")) == H2_TRANSVERSALS
    stream = enumerate_minimal_transversals(h2(), "dfs")
    assert stream.info == {"engine": "dfs"}


def test_empty_edge_rejected_eagerly():
    h = hypergraph_from_edges(2, [[0], []])
    for engine in EngineChoice:
        with pytest.raises(EmptyEdgeError):
            enumerate_minimal_transversals(h, engine)


def test_edgeless_hypergraph_has_empty_transversal():
    h = hypergraph_from_edges(3, [])
    for engine in EngineChoice:
        assert list(enumerate_minimal_transversals(h, engine)) == [frozenset()]


def test_stream_bookkeeping():
    stream = enumerate_minimal_transversals(h2())
    seen_ticks = 0
    for _ in stream:
        assert stream.ticks >= seen_ticks
        seen_ticks = stream.ticks
    assert stream.exhausted
    assert stream.ticks > 0


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_engines_agree_with_oracle(data):
    rng = random.Random(data.draw(st.integers(0, 10**9)))
    h = random_hypergraph(rng, rng.randint(1, 7), rng.randint(1, 7))
    want = canon(brute_minimal_solutions(transversal_predicate(h)))
    for engine in EngineChoice:
        assert canon(enumerate_minimal_transversals(h, engine)) == want


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_duality_on_sperner_instances(data):
    rng = random.Random(data.draw(st.integers(0, 10**9)))
    h = sperner_reduce(random_hypergraph(rng, rng.randint(1, 6), rng.randint(1, 5)))
    tr = canon(enumerate_minimal_transversals(h))
    back = canon(
        enumerate_minimal_transversals(hypergraph_from_edges(h.n, tr))
    )
    assert back == canon(h.edge_sets())


def _brute_mis(g):
    out = []
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if any(g.has_edge(u, v) for u in s for v in s if u < v):
                continue
            closed = set(s)
            for v in s:
                closed |= g.neighbors(v)
            if len(closed) == g.n:
                out.append(frozenset(s))
    return out


def test_maximal_independent_sets_match_brute_force():
    rng = random.Random(11)
    for _ in range(25):
        g = random_connected(rng, rng.randint(1, 8))
        assert canon(enumerate_maximal_independent_sets(g)) == canon(_brute_mis(g))


def test_minimal_vertex_covers_are_edge_transversals():
    rng = random.Random(12)
    for _ in range(25):
        g = random_connected(rng, rng.randint(2, 8))
        h = hypergraph_from_edges(g.n, [list(e) for e in g.edges()])
        want = canon(enumerate_minimal_transversals(h))
        assert canon(enumerate_minimal_vertex_covers(g)) == want


def _burst_stream(bursts):
    """Yield len-tagged solutions; each burst is (ticks beforehand, count)."""
    ticker = Ticker()

    def gen():
        v = 0
        for pre, count in bursts:
            ticker.tick(pre)
            for _ in range(count):
                yield frozenset([v])
                v += 1

    return SolutionStream(gen(), ticker)


def _expected_slots(bursts, budget):
    """Reference schedule: slot assignment plus post-exhaustion flush."""
    arrivals = []
    t = 0
    for pre, count in bursts:
        t += pre
        arrivals.extend([t] * count)
    slots = []
    next_slot = budget
    for a in arrivals:
        slot = max(next_slot, budget * (a // budget + 1))
        slots.append(slot)
        next_slot = slot + budget
    out = []
    late = t
    for slot in slots:
        if slot <= t:
            out.append(slot)
        else:
            late += 1
            out.append(late)
    return out


@given(
    st.lists(st.tuples(st.integers(0, 40), st.integers(0, 5)), min_size=1, max_size=8),
    st.integers(1, 12),
)
@settings(max_examples=120, deadline=None)
def test_regularizer_matches_reference_schedule(bursts, budget):
    out = regularize_delay(_burst_stream(bursts), budget)
    emitted = []
    observed = []
    for s in out:
        emitted.append(s)
        observed.append(out.ticks)
    total = sum(c for _, c in bursts)
    assert emitted == [frozenset([v]) for v in range(total)]
    assert observed == _expected_slots(bursts, budget)


def test_regularizer_rejects_bad_budget():
    with pytest.raises(ValueError):
        regularize_delay(_burst_stream([(1, 1)]), 0)


def test_regularizer_shares_info():
    inner = enumerate_minimal_transversals(h2())
    out = regularize_delay(inner, 3)
    assert out.info is inner.info
    assert canon(out) == H2_TRANSVERSALS
