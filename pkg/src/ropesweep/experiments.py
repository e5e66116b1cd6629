"""Exhaustive rope-length statistics per number of pseudolines."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool

from .arrangement import WiringDiagram, canonical_prefixes, enumerate_arrangements, symmetry_orbit
from .errors import ResourceLimit
from .graph import build_graph
from .optimal import DEFAULT_BUDGET_IDEALS, optimal_rope_length

CSV_FIELDS = (
    "n", "types", "min", "max", "argmax_count_raw", "argmax_count_mod_symmetry", "seconds", "status",
)


@dataclass
class ExperimentRow:
    n: int
    types: int = 0
    min: int | None = None
    max: int | None = None
    argmax_count_raw: int = 0
    argmax_count_mod_symmetry: int = 0
    seconds: float = 0.0
    status: str = "ok"
    histogram: dict[int, int] = field(default_factory=dict)
    argmax_words: list[tuple[int, ...]] = field(default_factory=list)

    def record(self) -> dict:
        return {
            "n": self.n,
            "types": self.types,
            "min": self.min,
            "max": self.max,
            "argmax_count_raw": self.argmax_count_raw,
            "argmax_count_mod_symmetry": self.argmax_count_mod_symmetry,
            "seconds": f"{self.seconds:.2f}",
            "status": self.status,
        }


@dataclass
class _Chunk:
    """Partial result over the arrangements sharing one prefix."""

    count: int = 0
    hist: Counter = field(default_factory=Counter)
    best: int = -1
    best_words: list[tuple[int, ...]] = field(default_factory=list)
    failures: int = 0
    timed_out: bool = False


def _run_chunk(args: tuple[int, tuple[int, ...], int | None, float | None]) -> _Chunk:
    n, prefix, budget_ideals, deadline = args
    out = _Chunk()

    def visit(swaps: tuple[int, ...]) -> None:
        if deadline is not None and time.time() > deadline:
            raise ResourceLimit("experiment exceeded its time budget")
        out.count += 1
        try:
            w = optimal_rope_length(
                build_graph(WiringDiagram(n, swaps)), budget_ideals=budget_ideals, witness=False
            ).optimal
        except ResourceLimit:
            out.failures += 1
            return
        out.hist[w] += 1
        if w > out.best:
            out.best, out.best_words = w, [swaps]
        elif w == out.best:
            out.best_words.append(swaps)

    try:
        enumerate_arrangements(n, visit, prefix=prefix, raw=True)
    except ResourceLimit:
        out.timed_out = True
    return out


def _prefix_depth(n: int) -> int:
    return 0 if n <= 5 else min(n, 6)


def run_row(
    n: int,
    *,
    jobs: int = 1,
    budget_ideals: int | None = DEFAULT_BUDGET_IDEALS,
    budget_seconds: float | None = None,
) -> ExperimentRow:
    """Optimal rope-length over every arrangement of ``n`` pseudolines.

    Work is split by canonical prefixes; the result does not depend on
    ``jobs``.  A row is flagged ``partial`` when some arrangement exceeded the
    ideal budget, and ``timeout`` when the time budget ran out.
    """
    start = time.time()
    deadline = None if budget_seconds is None else start + budget_seconds
    tasks = [(n, p, budget_ideals, deadline) for p in canonical_prefixes(n, _prefix_depth(n))]
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            chunks = pool.map(_run_chunk, tasks, chunksize=1)
    else:
        chunks = [_run_chunk(t) for t in tasks]

    row = ExperimentRow(n)
    hist: Counter = Counter()
    for c in chunks:
        row.types += c.count
        hist.update(c.hist)
    if hist:
        row.min, row.max = min(hist), max(hist)
        words = sorted(w for c in chunks if c.best == row.max for w in c.best_words)
        row.argmax_words = words
        row.argmax_count_raw = len(words)
        row.argmax_count_mod_symmetry = len(
            {min(symmetry_orbit(WiringDiagram(n, w))) for w in words}
        )
    row.histogram = dict(sorted(hist.items()))
    if any(c.timed_out for c in chunks):
        row.status = "timeout"
    elif any(c.failures for c in chunks):
        row.status = f"partial:{sum(c.failures for c in chunks)}"
    row.seconds = time.time() - start
    return row
