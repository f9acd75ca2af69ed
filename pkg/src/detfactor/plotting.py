"""Timing figures for benchmark output."""

from __future__ import annotations

import csv
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read_bench_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def _instance_times(rows) -> dict[int, list[float]]:
    times: dict[int, list[float]] = defaultdict(list)
    for row in rows:
        if row["kind"] == "instance":
            times[int(row["bits"])].append(float(row["elapsed_ms"]))
    return dict(sorted(times.items()))


def plot_bench(rows, out: Path | str, title: str = "Factorisation time vs. size") -> Path:
    """Per-instance and mean wall time against bit size, with N^(1/5) reference curves.

    Reference curves are anchored at the largest measured size.
    """
    times = _instance_times(rows)
    if not times:
        raise ValueError("no instance rows to plot")
    bits = list(times)
    means = [sum(v) / len(v) for v in times.values()]

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for b, v in times.items():
        ax.scatter([b] * len(v), v, s=12, color="0.6", zorder=2)
    ax.plot(bits, means, "o-", color="C0", label="mean wall time", zorder=3)

    anchor_b, anchor_t = bits[-1], means[-1]
    grid = [bits[0] + (bits[-1] - bits[0]) * k / 50 for k in range(51)] if len(bits) > 1 else bits
    fifth = [anchor_t * 2 ** ((b - anchor_b) / 5) for b in grid]
    ax.plot(grid, fifth, "--", color="C1", label=r"$\propto N^{1/5}$")
    full = [anchor_t * 2 ** ((b - anchor_b) / 5) * (b / anchor_b) ** (16 / 5) for b in grid]
    ax.plot(grid, full, ":", color="C2", label=r"$\propto N^{1/5}\,\lg^{16/5} N$")

    ax.set_yscale("log")
    ax.set_xlabel("bits of N")
    ax.set_ylabel("elapsed (ms)")
    ax.set_title(title)
    ax.legend(frameon=False)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
