"""Deterministic matplotlib setup shared by all figure scripts.

Figures must be pure functions of their input files: fixed style, no
timestamps, stable SVG ids.  Every renderer calls `apply_style()` once and
saves through `save_figure`, which writes both PNG and SVG.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_STYLE = {
    "figure.dpi": 110,
    "savefig.dpi": 110,
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "thermomagic-figures",
}

COLOURS = ("#d62728", "#1f77b4", "#e6b422", "#2ca02c", "#9467bd")
SENTINEL_COLOUR = "#d9d9d9"


def apply_style() -> None:
    matplotlib.rcParams.update(_STYLE)


def save_figure(fig, out_stem: str) -> list[str]:
    """Write <stem>.png and <stem>.svg without volatile metadata."""
    paths = []
    png = f"{out_stem}.png"
    fig.savefig(png, format="png")
    paths.append(png)
    svg = f"{out_stem}.svg"
    fig.savefig(svg, format="svg", metadata={"Date": None})
    paths.append(svg)
    plt.close(fig)
    return paths
