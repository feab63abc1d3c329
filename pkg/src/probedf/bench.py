"""Timing and operation counts of :func:`recognize` across graph sizes."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field

from .generators import gnp, planted_yes
from .graph import Graph, OpCounts
from .recognizer import recognize


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    seconds: float
    ops: int
    member: bool

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "seconds": self.seconds, "ops": self.ops, "member": self.member}


@dataclass
class BenchReport:
    """Rows sorted by ``n``; ``exponent`` is the log-log slope of time against ``n * m``.

    The slope is undefined (``None``) unless at least two distinct ``n * m`` occur.
    """

    kind: str
    rows: list[BenchRow] = field(default_factory=list)

    @property
    def exponent(self) -> float | None:
        pts = [(math.log(r.n * r.m), math.log(r.seconds)) for r in self.rows if r.m and r.seconds > 0]
        if len({x for x, _ in pts}) < 2:
            return None
        xs, ys = zip(*pts)
        return statistics.linear_regression(xs, ys).slope

    def ops_ratio(self) -> float | None:
        """Largest ``ops / (n * m)`` over the rows; a bound on the constant."""
        ratios = [r.ops / (r.n * r.m) for r in self.rows if r.m]
        return max(ratios) if ratios else None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rows": [r.to_json() for r in self.rows],
            "exponent": self.exponent,
            "ops_ratio": self.ops_ratio(),
        }


def bench_graph(kind: str, n: int, density: float, seed: int) -> Graph:
    """Instance with about ``density * n`` edges."""
    if kind == "gnp":
        return gnp(n, min(1.0, 2 * density / max(n - 1, 1)), seed)
    if kind == "planted-yes":
        # edge deletion inside the nonprobe set removes roughly an eighth
        return planted_yes(n, seed, avg_degree=2 * density * 8 / 7)
    raise ValueError(f"unknown bench kind {kind!r}")


def time_recognize(g: Graph, repeats: int = 3) -> BenchRow:
    """Median wall time of ``repeats`` runs, plus the operation count of one run."""
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    times = []
    ops = OpCounts()
    cert = None
    for i in range(repeats):
        counter = OpCounts() if i == 0 else None
        start = time.perf_counter()
        cert = recognize(g, counter)
        times.append(time.perf_counter() - start)
        if counter is not None:
            ops = counter
    return BenchRow(g.n, g.m, statistics.median(times), ops.total, cert.member)


def run_bench(sizes, density: float = 10.0, seed: int = 0, repeats: int = 3,
              kind: str = "gnp", instances: int = 1) -> BenchReport:
    """Benchmark ``instances`` seeded graphs per size with ``m`` near ``density * n``.

    ``sizes`` must be ascending. Each instance is its own row, and the
    exponent is fitted through all of them.
    """
    sizes = list(sizes)
    if sizes != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if instances < 1:
        raise ValueError("instances must be at least 1")
    report = BenchReport(kind)
    for n in sizes:
        for i in range(instances):
            g = bench_graph(kind, n, density, seed + n + 100_003 * i)
            report.rows.append(time_recognize(g, repeats))
    return report
