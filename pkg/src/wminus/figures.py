"""Optional matplotlib figures for the ``dims`` and ``verify`` reports."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .trace import EXPECTED_MISMATCH, MATCH, MISMATCH, NOT_EXPRESSIBLE  # noqa: E402

__all__ = ["dims_heatmap", "verify_chart"]

_STATUS_COLORS = {
    MATCH: "#4c72b0",
    EXPECTED_MISMATCH: "#dd8452",
    MISMATCH: "#c44e52",
    NOT_EXPRESSIBLE: "#8c8c8c",
}


def _save(fig, directory, name):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    # fixed metadata keeps repeated runs byte-identical
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


def dims_heatmap(table, directory: str) -> str:
    """Heatmap of a :class:`~wminus.dims.DimTable` with the counts written in."""
    data = np.array(table.rows(), dtype=float)
    rs = table.r_range()
    fig, ax = plt.subplots(figsize=(1 + 0.5 * len(rs), 1 + 0.45 * data.shape[0]))
    ax.imshow(np.log1p(data), origin="lower", cmap="viridis", aspect="auto")
    for k in range(data.shape[0]):
        for i in range(data.shape[1]):
            value = int(data[k, i])
            if value:
                ax.text(i, k, str(value), ha="center", va="center", fontsize=7, color="white")
    ax.set_xticks(range(len(rs)), [str(r) for r in rs])
    ax.set_yticks(range(data.shape[0]))
    ax.set_xlabel("rank r")
    ax.set_ylabel("dots k")
    ax.set_title(f"graded dimensions ({table.side})")
    return _save(fig, directory, "dims.png")


def verify_chart(reports, directory: str) -> str:
    """Stacked bar chart of report statuses per suite."""
    suites = sorted({r.suite for r in reports})
    statuses = [MATCH, EXPECTED_MISMATCH, MISMATCH, NOT_EXPRESSIBLE]
    counts = {s: [sum(1 for r in reports if r.suite == su and r.status == s) for su in suites] for s in statuses}
    fig, ax = plt.subplots(figsize=(1.5 + 0.9 * len(suites), 3.5))
    bottom = np.zeros(len(suites))
    for s in statuses:
        values = np.array(counts[s], dtype=float)
        if values.any():
            ax.bar(suites, values, bottom=bottom, label=s, color=_STATUS_COLORS[s])
            bottom += values
    ax.set_ylabel("reports")
    ax.set_title("verification status by suite")
    ax.legend(fontsize=7, frameon=False)
    return _save(fig, directory, "verify.png")
