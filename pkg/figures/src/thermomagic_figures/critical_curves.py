"""Two-panel critical-parameter figure from threshold sweep CSVs.

Left: critical inverse temperature against coherence (one CSV per
Hamiltonian direction, `c,beta_crt`).  Right: critical coherence against
inverse temperature (`beta,c_crt`).  Sentinel cells render as gaps, never
interpolated across.
"""

from __future__ import annotations

import matplotlib.pyplot as plt
import numpy as np

from .io import read_curve
from .style import COLOURS, apply_style, save_figure


def _draw(ax, curves) -> None:
    for colour, curve in zip(COLOURS, curves):
        mask = np.isfinite(curve.y)
        ax.plot(
            np.where(mask, curve.x, np.nan),
            np.where(mask, curve.y, np.nan),
            color=colour,
            marker="o",
            markersize=2.5,
            linewidth=1.2,
            label=curve.label,
        )


def plot_critical_curves(
    beta_csvs: list[str],
    coherence_csvs: list[str],
    out_stem: str,
    labels: list[str] | None = None,
) -> list[str]:
    """Render the figure; returns the written file paths (PNG and SVG)."""
    if not beta_csvs and not coherence_csvs:
        raise ValueError("need at least one sweep CSV")
    labels = labels or [None] * max(len(beta_csvs), len(coherence_csvs))
    apply_style()
    fig, (ax_l, ax_r) = plt.subplots(1, 2, figsize=(7.6, 3.0))
    _draw(
        ax_l,
        [
            read_curve(path, ("c", "beta_crt"), label)
            for path, label in zip(beta_csvs, labels)
        ],
    )
    ax_l.set_xlabel("coherence c")
    ax_l.set_ylabel(r"critical inverse temperature")
    _draw(
        ax_r,
        [
            read_curve(path, ("beta", "c_crt"), label)
            for path, label in zip(coherence_csvs, labels)
        ],
    )
    ax_r.set_xlabel(r"inverse temperature $\beta$")
    ax_r.set_ylabel("critical coherence")
    if any(labels):
        ax_l.legend(loc="best", fontsize=7)
    fig.tight_layout()
    return save_figure(fig, out_stem)
