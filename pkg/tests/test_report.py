import csv
import json

from helpers import h2
from metricenum.engine import SolutionStream, Ticker, enumerate_minimal_transversals
from metricenum.report import (
    ProfileRow,
    input_digest,
    profile_stream,
    render_bench_figure,
    write_bench_csv,
)


def test_input_digest():
    d = input_digest("p hg 2 1\n1 2\n")
    assert len(d) == 16 and int(d, 16) >= 0
    assert d == input_digest("p hg 2 1\n1 2\n")
    assert d != input_digest("p hg 2 1\n1\n")


def _scripted_stream(script):
    """script: (ticks to spend, solution) pairs."""
    ticker = Ticker()

    def gen():
        for pre, s in script:
            ticker.tick(pre)
            yield s

    return SolutionStream(gen(), ticker, info={"engine": "scripted"})


def test_profile_stream():
    script = [(3, frozenset({0})), (2, frozenset({1})), (7, frozenset({0, 1}))]
    emitted = []
    rows, report = profile_stream(_scripted_stream(script), "abc", emit=emitted.append)
    assert emitted == [s for _, s in script]
    assert [(r.solution, r.ticks, r.gap) for r in rows] == [(1, 3, 3), (2, 5, 2), (3, 12, 7)]
    assert report.solutions == 3
    assert report.max_gap_ticks == 7
    assert report.total_ticks == 12
    assert report.engine == "scripted"
    assert report.input_digest == "abc"
    decoded = json.loads(report.to_json())
    assert decoded["solutions"] == 3 and decoded["engine"] == "scripted"


def test_profile_stream_empty():
    rows, report = profile_stream(_scripted_stream([]))
    assert rows == [] and report.solutions == 0 and report.max_gap_ticks == 0


def test_profile_counts_match_enumeration(tmp_path):
    stream = enumerate_minimal_transversals(h2())
    rows, report = profile_stream(stream)
    assert report.solutions == len(rows) == 7
    assert report.total_ticks == rows[-1].ticks == stream.ticks
    assert report.max_gap_ticks == max(r.gap for r in rows)


def test_write_bench_csv(tmp_path):
    rows = [ProfileRow(1, 4, 4, 0.25), ProfileRow(2, 6, 2, 0.5)]
    path = tmp_path / "out.csv"
    write_bench_csv(path, rows)
    with open(path, newline="") as fh:
        got = list(csv.reader(fh))
    assert got == [
        ["solution", "ticks", "gap", "seconds"],
        ["1", "4", "4", "0.250000"],
        ["2", "6", "2", "0.500000"],
    ]


def test_render_bench_figure(tmp_path):
    rows = [ProfileRow(i + 1, 3 * (i + 1), 3, 0.1) for i in range(5)]
    path = tmp_path / "fig.png"
    render_bench_figure(path, rows, "demo")
    assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    empty = tmp_path / "empty.png"
    render_bench_figure(empty, [], "empty")
    assert empty.exists()
