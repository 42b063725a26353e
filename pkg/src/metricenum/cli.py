"""Command-line front door.

Subcommands parse instance files, stream solutions one per line (ascending
1-based vertex ids, space-separated), build reduction gadgets, answer
extension queries, run the cross-check suite, and profile runs into CSV
plus a rendered figure. Exit codes: 1 usage, 2 parse, 3 precondition
violation, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import verify as verify_mod
from .engine import enumerate_minimal_transversals, regularize_delay
from .errors import DecodeFailure, ParseError, PreconditionViolation, VerificationError
from .graphs import parse_graph, write_graph_text
from .hypergraphs import (
    pad_for_ext_resolving_reduction,
    pad_for_resolving_reduction,
    parse_hypergraph,
)
from .metric import (
    enumerate_minimal_geodetic_sets,
    enumerate_minimal_resolving_sets,
    enumerate_minimal_strong_resolving_sets,
)
from .reductions import (
    EXT_KINDS,
    build_ext_geodetic_instance,
    build_ext_resolving_instance,
    build_mingeodetic_instance,
    build_minresolving_instance,
    ext_check,
    write_dot,
    write_roles_text,
)
from .report import input_digest, profile_stream, render_bench_figure, write_bench_csv

_PROBLEMS = ("transversals", "resolve", "geodetic", "strong-resolve")
_REDUCE_KINDS = ("resolving", "geodetic", "ext-geodetic", "ext-resolving")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def _format(s) -> str:
    return " ".join(str(v + 1) for v in sorted(s))


def _parse_ids(text: str | None) -> frozenset[int]:
    """Comma- or space-separated 1-based vertex ids."""
    if not text:
        return frozenset()
    out = set()
    for tok in text.replace(",", " ").split():
        try:
            v = int(tok)
        except ValueError:
            raise _UsageError(f"bad vertex id {tok!r}") from None
        if v < 1:
            raise _UsageError(f"vertex ids are 1-based, got {v}")
        out.add(v - 1)
    return frozenset(out)


def _read_input(args) -> str:
    paths = [p for p in (args.path, args.input) if p is not None]
    if len(paths) != 1:
        raise _UsageError("give the input exactly once (positional or --input)")
    if paths[0] == "-":
        return sys.stdin.read()
    return Path(paths[0]).read_text(encoding="utf-8")


def _add_input_arg(p) -> None:
    p.add_argument("path", nargs="?", help="input file, or '-' for stdin")
    p.add_argument("--input", metavar="PATH", help="input file (same as the positional form)")


def _add_stream_args(p, engine: bool) -> None:
    if engine:
        p.add_argument("--engine", choices=["berge", "dfs"], default="dfs")
    p.add_argument("--regularize", type=int, metavar="BUDGET", help="bound inter-output tick gaps")
    p.add_argument("--stats", choices=["json"], help="append a run report after the solutions")


def _build_stream(args, text: str):
    problem, budget = args.problem, args.regularize
    engine = getattr(args, "engine", None)
    if problem == "transversals":
        stream = enumerate_minimal_transversals(parse_hypergraph(text), engine)
    elif problem == "resolve":
        stream = enumerate_minimal_resolving_sets(parse_graph(text), engine)
    elif problem == "geodetic":
        stream = enumerate_minimal_geodetic_sets(
            parse_graph(text), engine, size_limit=getattr(args, "size_limit", 20)
        )
    else:
        stream = enumerate_minimal_strong_resolving_sets(parse_graph(text))
    if budget is not None:
        if budget < 1:
            raise _UsageError("--regularize budget must be positive")
        stream = regularize_delay(stream, budget)
    return stream


def _cmd_enumerate(args) -> int:
    text = _read_input(args)
    stream = _build_stream(args, text)
    if args.stats:
        _, report = profile_stream(stream, input_digest(text), emit=lambda s: print(_format(s)))
        print(report.to_json())
    else:
        for s in stream:
            print(_format(s))
    return 0


def _cmd_reduce(args) -> int:
    h = parse_hypergraph(_read_input(args))
    a, b = _parse_ids(args.contain), _parse_ids(args.avoid)
    if args.kind in ("resolving", "geodetic") and (a or b):
        raise _UsageError(f"--contain/--avoid only apply to extension kinds, not {args.kind}")
    if args.pad and args.kind in ("geodetic", "ext-geodetic"):
        raise _UsageError(f"no padding step exists for kind {args.kind}")
    ext_lines: list[str] = []
    if args.kind == "resolving":
        if args.pad:
            h = pad_for_resolving_reduction(h)
        artifact = build_minresolving_instance(h)
    elif args.kind == "geodetic":
        artifact = build_mingeodetic_instance(h)
    else:
        if args.kind == "ext-geodetic":
            inst = build_ext_geodetic_instance(h, a, b)
        else:
            if args.pad:
                h, a, b = pad_for_ext_resolving_reduction(h, a, b)
            inst = build_ext_resolving_instance(h, a, b)
        artifact = inst.artifact
        ext_lines = [
            ("contain " + _format(inst.a_prime)).rstrip(),
            ("avoid " + _format(inst.b_prime)).rstrip(),
        ]
    graph_text = write_graph_text(artifact.graph)
    roles_text = write_roles_text(artifact)
    if args.output:
        Path(args.output + ".graph").write_text(graph_text, encoding="utf-8")
        Path(args.output + ".roles").write_text(roles_text, encoding="utf-8")
        if args.dot:
            Path(args.output + ".dot").write_text(write_dot(artifact), encoding="utf-8")
        for line in ext_lines:
            print(line)
    else:
        sections = [graph_text, roles_text]
        if ext_lines:
            sections.append("".join(line + "\n" for line in ext_lines))
        if args.dot:
            sections.append(write_dot(artifact))
        sys.stdout.write("\n".join(sections))
    return 0


def _cmd_ext(args) -> int:
    text = _read_input(args)
    subject = parse_hypergraph(text) if args.kind == "transversal" else parse_graph(text)
    answer = ext_check(
        args.kind, subject, _parse_ids(args.contain), _parse_ids(args.avoid),
        size_limit=args.size_limit,
    )
    print(("YES " + _format(answer.witness)).rstrip() if answer.yes else "NO")
    return 0


def _cmd_verify(args) -> int:
    failed = False
    for name, ok, detail in verify_mod.run_all(args.seed):
        print(f"{'ok' if ok else 'FAIL'} {name}: {detail}")
        failed = failed or not ok
    return 4 if failed else 0


def _cmd_bench(args) -> int:
    text = _read_input(args)
    stream = _build_stream(args, text)
    rows, report = profile_stream(stream, input_digest(text))
    write_bench_csv(args.output + ".csv", rows)
    render_bench_figure(args.output + ".png", rows, f"{args.problem} ({report.engine or 'mis'})")
    print(report.to_json())
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="metricenum", description=__doc__.split("\n\n")[1])
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    for problem in _PROBLEMS:
        p = sub.add_parser(problem, help=f"enumerate minimal solutions ({problem})")
        _add_input_arg(p)
        _add_stream_args(p, engine=problem != "strong-resolve")
        if problem == "geodetic":
            p.add_argument("--size-limit", type=int, default=20, metavar="N",
                           help="subset-scan gate for non-split inputs")
        p.set_defaults(func=_cmd_enumerate, problem=problem)

    p = sub.add_parser("reduce", help="build a gadget graph from a hypergraph")
    _add_input_arg(p)
    p.add_argument("--kind", choices=_REDUCE_KINDS, required=True)
    p.add_argument("--contain", metavar="IDS", help="extension kinds: vertices to force")
    p.add_argument("--avoid", metavar="IDS", help="extension kinds: vertices to forbid")
    p.add_argument("--pad", action="store_true", help="pad the instance into gadget shape first")
    p.add_argument("--output", metavar="PREFIX", help="write PREFIX.graph/.roles (and .dot)")
    p.add_argument("--dot", action="store_true", help="also emit DOT with role colors")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("ext", help="decide the extension problem, printing YES <witness> or NO")
    _add_input_arg(p)
    p.add_argument("--kind", choices=list(EXT_KINDS), required=True)
    p.add_argument("--contain", metavar="IDS", help="vertices the solution must include")
    p.add_argument("--avoid", metavar="IDS", help="vertices the solution must miss")
    p.add_argument("--size-limit", type=int, default=24, metavar="N",
                   help="free-vertex gate for the subset scan")
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("--seed", type=int, default=2718)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="profile a run into PREFIX.csv and PREFIX.png")
    p.add_argument("problem", choices=_PROBLEMS)
    _add_input_arg(p)
    _add_stream_args(p, engine=True)
    p.add_argument("--output", metavar="PREFIX", required=True)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (PreconditionViolation, DecodeFailure) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except VerificationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
