"""Matplotlib figure summarising the distribution of optimal rope-lengths."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .experiments import ExperimentRow  # noqa: E402


def plot_histograms(rows: Sequence[ExperimentRow], path: str | Path) -> Path:
    """One bar group per ``n``: share of arrangements needing each rope-length.

    The file is written with fixed metadata so repeated runs give identical bytes.
    """
    path = Path(path)
    plt.rcParams["svg.hashsalt"] = "ropesweep"
    fig, ax = plt.subplots(figsize=(7, 4))
    rows = [r for r in rows if r.histogram]
    width = 0.8 / max(len(rows), 1)
    for k, row in enumerate(rows):
        total = sum(row.histogram.values())
        xs = [w + (k - (len(rows) - 1) / 2) * width for w in row.histogram]
        ys = [c / total for c in row.histogram.values()]
        ax.bar(xs, ys, width=width, label=f"n = {row.n}")
    ax.set_xlabel("optimal rope-length")
    ax.set_ylabel("fraction of arrangements")
    if rows:
        ax.legend()
    fig.tight_layout()
    fmt = path.suffix.lstrip(".") or "svg"
    meta = {"Date": None} if fmt in ("svg", "pdf") else {}
    if fmt == "png":
        meta = {"Software": None}
    fig.savefig(path, format=fmt, metadata=meta)
    plt.close(fig)
    return path
