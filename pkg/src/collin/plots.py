"""File-based rendering of threshold-sweep series."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def render_sweep(rows, n: int, threshold: float, path) -> Path:
    """Plot (k, max_vif, max_avif) rows against model size and save to ``path``.

    Returns the written path. PNG or any extension matplotlib understands.
    """
    ks = [row[0] for row in rows]
    vif = [row[1] for row in rows]
    avif = [row[2] for row in rows]

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(ks, vif, marker="o", markersize=3, linewidth=1.2, label="max VIF")
    ax.plot(ks, avif, marker="s", markersize=3, linewidth=1.2, label="max aVIF")
    ax.axhline(threshold, color="crimson", linestyle="--", linewidth=1.0, label=f"threshold {threshold:g}")
    ax.set_xlabel("number of coefficients k (intercept included)")
    ax.set_ylabel("maximum inflation factor")
    ax.set_title(f"Inflation factors against model size (n = {n})")
    ax.legend(frameon=False)
    ax.set_yscale("log")
    fig.tight_layout()
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
