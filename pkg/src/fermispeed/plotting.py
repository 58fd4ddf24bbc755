"""Quick-look matplotlib renderings of the data files the toolkit emits.

These figures are diagnostic companions written next to the CSV output
when the CLI is invoked with --plot; the delimited files remain the
canonical artifacts.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_RC = {
    "figure.figsize": (5.2, 4.0),
    "figure.dpi": 130,
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "savefig.bbox": "tight",
}


def render_grid(gmap, path) -> None:
    """Heatmap of a grid map; excluded and infinite cells are left blank."""
    display = np.array(gmap.values, dtype=float)
    display[np.isinf(display)] = np.nan
    extent = (*gmap.spec.coord1_range, *gmap.spec.coord2_range)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        image = ax.imshow(
            display.T,
            origin="lower",
            extent=extent,
            aspect="auto",
            cmap="viridis",
            interpolation="nearest",
        )
        fig.colorbar(image, ax=ax, label=gmap.units)
        ax.set_xlabel(gmap.meta.get("coord1_name", "coord1"))
        ax.set_ylabel(gmap.meta.get("coord2_name", "coord2"))
        ax.set_title(gmap.kind)
        fig.savefig(path)
        plt.close(fig)


def render_records(records, path, title: str | None = None) -> None:
    """Scatter of relative orthogonality time against squared concurrence."""
    c2 = [r.c_squared for r in records]
    ratio = [r.ratio for r in records]
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        ax.plot(c2, ratio, ".", markersize=2, alpha=0.25)
        ax.set_xlabel("squared concurrence")
        ax.set_ylabel("ratio of first orthogonality time to speed limit")
        if title:
            ax.set_title(title)
        fig.savefig(path)
        plt.close(fig)


def render_sweep(blocks, path) -> None:
    """One scatter panel per (alpha, beta) setting of a phase sweep."""
    n = len(blocks)
    cols = min(n, 3)
    rows = math.ceil(n / cols)
    with plt.rc_context(_RC):
        fig, axes = plt.subplots(
            rows, cols, figsize=(3.2 * cols, 2.6 * rows), squeeze=False
        )
        for k, ((alpha, beta), records) in enumerate(blocks):
            ax = axes[k // cols][k % cols]
            ax.plot(
                [r.c_squared for r in records],
                [r.ratio for r in records],
                ".",
                markersize=2,
                alpha=0.25,
            )
            ax.set_title(f"alpha={alpha / math.pi:.2f}pi, beta={beta / math.pi:.2f}pi")
        for k in range(n, rows * cols):
            axes[k // cols][k % cols].set_axis_off()
        fig.savefig(path)
        plt.close(fig)


def render_series(series, path) -> None:
    """Survival probability against the evolution phase."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        ax.plot(series.times / math.pi, series.values)
        ax.set_xlabel("phi / pi")
        ax.set_ylabel("survival probability")
        ax.set_ylim(-0.02, 1.02)
        fig.savefig(path)
        plt.close(fig)
