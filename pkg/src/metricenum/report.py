"""Run statistics for stream consumers and bench output writers.

A RunReport summarizes one drained stream; the bench writers store the
per-solution tick profile as CSV and render it to a figure file.
"""

from __future__ import annotations

import csv
import hashlib
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Callable, Iterable

from .engine import SolutionStream


@dataclass(frozen=True)
class RunReport:
    """Summary of a drained stream; wall_seconds is the only varying field."""

    solutions: int
    max_gap_ticks: int
    total_ticks: int
    wall_seconds: float
    engine: str
    input_digest: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass(frozen=True)
class ProfileRow:
    """One emitted solution: running index, clock reading, gap, wall time."""

    solution: int
    ticks: int
    gap: int
    seconds: float


def input_digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def profile_stream(
    stream: SolutionStream,
    digest: str = "",
    emit: Callable[[frozenset[int]], None] | None = None,
) -> tuple[list[ProfileRow], RunReport]:
    """Drain a stream, forwarding each solution to emit as it appears."""
    t0 = time.perf_counter()
    rows: list[ProfileRow] = []
    prev = 0
    for count, s in enumerate(stream, start=1):
        rows.append(ProfileRow(count, stream.ticks, stream.ticks - prev, time.perf_counter() - t0))
        prev = stream.ticks
        if emit is not None:
            emit(s)
    report = RunReport(
        solutions=len(rows),
        max_gap_ticks=max((r.gap for r in rows), default=0),
        total_ticks=stream.ticks,
        wall_seconds=time.perf_counter() - t0,
        engine=str(stream.info.get("engine", "")),
        input_digest=digest,
    )
    return rows, report


def write_bench_csv(path: str | Path, rows: Iterable[ProfileRow]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["solution", "ticks", "gap", "seconds"])
        for r in rows:
            writer.writerow([r.solution, r.ticks, r.gap, f"{r.seconds:.6f}"])


def render_bench_figure(path: str | Path, rows: list[ProfileRow], title: str) -> None:
    """Two-panel tick profile: cumulative clock and per-solution gap."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [r.solution for r in rows]
    fig, (ax_ticks, ax_gap) = plt.subplots(2, 1, sharex=True, figsize=(7, 5))
    ax_ticks.plot(xs, [r.ticks for r in rows], drawstyle="steps-post")
    ax_ticks.set_ylabel("engine ticks")
    ax_ticks.set_title(title)
    ax_gap.plot(xs, [r.gap for r in rows], drawstyle="steps-post", color="firebrick")
    ax_gap.set_ylabel("gap (ticks)")
    ax_gap.set_xlabel("solution index")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
