import io
import json

import pytest

from helpers import H2_TRANSVERSALS, h2
from metricenum.cli import main
from metricenum.graphs import parse_graph, write_graph_text
from metricenum.reductions import build_mingeodetic_instance
from metricenum.report import input_digest

H2_TEXT = "1 2\n2 3 4\n3 5\n4 5 6\n"
P3_TEXT = "p edge 3 2\ne 1 2\ne 2 3\n"


@pytest.fixture
def h2_file(tmp_path):
    f = tmp_path / "h2.hg"
    f.write_text(H2_TEXT)
    return str(f)


@pytest.fixture
def p3_file(tmp_path):
    f = tmp_path / "p3.graph"
    f.write_text(P3_TEXT)
    return str(f)


def _lines(capsys):
    return capsys.readouterr().out.splitlines()


def _as_sets(lines):
    return sorted(tuple(int(f) - 1 for f in line.split()) for line in lines)


def test_transversals_golden(h2_file, capsys):
    assert main(["transversals", h2_file]) == 0
    lines = _lines(capsys)
    assert len(lines) == 7
    assert "1 3 5" in lines
    assert _as_sets(lines) == H2_TRANSVERSALS


def test_input_flag_and_positional_are_equivalent(h2_file, capsys):
    main(["transversals", h2_file])
    positional = _lines(capsys)
    main(["transversals", "--input", h2_file])
    assert _lines(capsys) == positional
    assert main(["transversals", h2_file, "--input", h2_file]) == 1
    assert main(["transversals"]) == 1


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(H2_TEXT))
    assert main(["transversals", "-"]) == 0
    assert len(_lines(capsys)) == 7


def test_engine_flag(h2_file, capsys):
    main(["transversals", h2_file, "--engine", "berge"])
    berge = _as_sets(_lines(capsys))
    main(["transversals", h2_file, "--engine", "dfs"])
    assert _as_sets(_lines(capsys)) == berge == H2_TRANSVERSALS


def test_stats_trailer(h2_file, capsys):
    assert main(["transversals", h2_file, "--stats", "json"]) == 0
    lines = _lines(capsys)
    report = json.loads(lines[-1])
    assert report["solutions"] == len(lines) - 1 == 7
    assert report["engine"] == "dfs"
    assert report["input_digest"] == input_digest(H2_TEXT)
    assert report["max_gap_ticks"] <= report["total_ticks"]


def test_regularize_flag(h2_file, capsys):
    assert main(["transversals", h2_file, "--regularize", "4"]) == 0
    assert _as_sets(_lines(capsys)) == H2_TRANSVERSALS
    assert main(["transversals", h2_file, "--regularize", "0"]) == 1


def test_output_is_deterministic(h2_file, capsys):
    main(["transversals", h2_file, "--stats", "json"])
    first = _lines(capsys)
    main(["transversals", h2_file, "--stats", "json"])
    second = _lines(capsys)
    assert first[:-1] == second[:-1]
    a, b = json.loads(first[-1]), json.loads(second[-1])
    a.pop("wall_seconds"), b.pop("wall_seconds")
    assert a == b


def test_geodetic_on_gadget_file(tmp_path, capsys):
    gadget = tmp_path / "gadget.graph"
    gadget.write_text(write_graph_text(build_mingeodetic_instance(h2()).graph))
    assert main(["geodetic", "--input", str(gadget)]) == 0
    assert len(_lines(capsys)) == 11


def test_resolve_and_strong_resolve(p3_file, capsys):
    assert main(["resolve", p3_file]) == 0
    assert sorted(_lines(capsys)) == ["1", "3"]
    assert main(["strong-resolve", p3_file]) == 0
    assert sorted(_lines(capsys)) == ["1", "3"]


def test_reduce_to_files(h2_file, tmp_path, capsys):
    prefix = str(tmp_path / "gadget")
    assert main(["reduce", "--kind", "geodetic", h2_file, "--output", prefix, "--dot"]) == 0
    assert _lines(capsys) == []
    g = parse_graph((tmp_path / "gadget.graph").read_text())
    assert g.n == 16
    roles = (tmp_path / "gadget.roles").read_text().splitlines()
    assert len(roles) == 16 and roles[0] == "1 v1"
    dot = (tmp_path / "gadget.dot").read_text()
    assert dot.startswith("graph gadget {")


def test_reduce_to_stdout(h2_file, capsys):
    assert main(["reduce", "--kind", "geodetic", h2_file]) == 0
    out = capsys.readouterr().out
    graph_text, roles_text = out.split("\n\n")
    assert graph_text.splitlines()[0] == "p edge 16 84"
    assert len(roles_text.strip().splitlines()) == 16


def test_reduce_ext_kind_prints_prescribed_sets(h2_file, capsys):
    rc = main(
        ["reduce", "--kind", "ext-geodetic", h2_file, "--contain", "1", "--avoid", "2"]
    )
    assert rc == 0
    lines = _lines(capsys)
    assert "contain 1 11 12 13" in lines
    assert "avoid 2 7 8 9 10" in lines


def test_reduce_with_pad(tmp_path, capsys):
    f = tmp_path / "small.hg"
    f.write_text("1\n2 3\n")
    assert main(["reduce", "--kind", "resolving", str(f), "--pad"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "p edge 24 162"
    assert main(["reduce", "--kind", "resolving", str(f)]) == 3
    capsys.readouterr()


def test_reduce_flag_validation(h2_file):
    assert main(["reduce", "--kind", "geodetic", h2_file, "--pad"]) == 1
    assert main(["reduce", "--kind", "resolving", h2_file, "--contain", "1"]) == 1
    assert main(["reduce", h2_file]) == 1


def test_ext_command(h2_file, capsys):
    assert main(["ext", "--kind", "transversal", h2_file, "--contain", "1", "--avoid", "2"]) == 0
    assert _lines(capsys) == ["YES 1 3 4"]
    assert main(["ext", "--kind", "transversal", h2_file, "--contain", "1,2", "--avoid", "3"]) == 0
    assert _lines(capsys) == ["NO"]
    assert main(["ext", "--kind", "transversal", h2_file, "--contain", "1", "--avoid", "1"]) == 3
    assert main(["ext", "--kind", "transversal", h2_file, "--contain", "x"]) == 1


def test_exit_codes(tmp_path, p3_file, capsys):
    bad_graph = tmp_path / "bad.graph"
    bad_graph.write_text("p edge 2 1\ne 1 1\n")
    assert main(["resolve", str(bad_graph)]) == 2
    empty_edge = tmp_path / "empty.hg"
    empty_edge.write_text("p hg 2 2\n1 2\n\n")
    assert main(["transversals", str(empty_edge)]) == 3
    assert main(["transversals", str(tmp_path / "missing.hg")]) == 1
    assert main(["resolve", p3_file, "--engine", "bogus"]) == 1
    assert main(["nonsense"]) == 1
    capsys.readouterr()


def test_verify_command(capsys):
    assert main(["verify", "--seed", "7"]) == 0
    lines = _lines(capsys)
    assert len(lines) == 10
    assert all(line.startswith("ok ") for line in lines)


def test_bench_command(h2_file, tmp_path, capsys):
    prefix = str(tmp_path / "bench")
    assert main(["bench", "transversals", h2_file, "--output", prefix]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["solutions"] == 7
    csv_lines = (tmp_path / "bench.csv").read_text().splitlines()
    assert csv_lines[0] == "solution,ticks,gap,seconds"
    assert len(csv_lines) == 8
    assert (tmp_path / "bench.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
