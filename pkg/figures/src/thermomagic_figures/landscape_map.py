"""Equirectangular heatmap of a distillability landscape CSV.

Unattainable cells keep a distinct flat colour; the Clifford-orbit
directions of the selected target are overlaid as dots.
"""

from __future__ import annotations

import matplotlib.pyplot as plt
import numpy as np

from .io import read_landscape
from .style import SENTINEL_COLOUR, apply_style, save_figure

# Bloch directions of the two magic-state orbits (fixed constants)
_SQRT2 = np.sqrt(2.0)
_SQRT3 = np.sqrt(3.0)
ORBIT_MARKERS = {
    "T": np.array(
        [
            (sx / _SQRT3, sy / _SQRT3, sz / _SQRT3)
            for sx in (-1, 1)
            for sy in (-1, 1)
            for sz in (-1, 1)
        ]
    ),
    "H": np.array(
        [
            v
            for i, j in ((0, 1), (0, 2), (1, 2))
            for si in (-1, 1)
            for sj in (-1, 1)
            for v in [
                tuple(
                    (si / _SQRT2 if k == i else sj / _SQRT2 if k == j else 0.0)
                    for k in range(3)
                )
            ]
        ]
    ),
}


def plot_landscape(csv_path: str, out_stem: str, orbit: str = "T") -> list[str]:
    """Render the heatmap; returns the written file paths (PNG and SVG)."""
    if orbit not in ORBIT_MARKERS:
        raise ValueError(f"unknown orbit {orbit!r}; expected 'T' or 'H'")
    data = read_landscape(csv_path)
    apply_style()
    fig, ax = plt.subplots(figsize=(5.2, 2.9))
    lon_deg = np.rad2deg(data.lon)
    lat_deg = np.rad2deg(data.lat)
    cmap = plt.get_cmap("RdYlBu").copy()
    cmap.set_bad(SENTINEL_COLOUR)
    masked = np.ma.masked_invalid(data.values)
    mesh = ax.pcolormesh(lon_deg, lat_deg, masked, cmap=cmap, shading="nearest")
    fig.colorbar(mesh, ax=ax, label=r"$\beta$ at distillability")
    dirs = ORBIT_MARKERS[orbit]
    ax.plot(
        np.rad2deg(np.arctan2(dirs[:, 1], dirs[:, 0])),
        np.rad2deg(np.arcsin(dirs[:, 2])),
        "k.",
        markersize=4,
        linestyle="none",
    )
    ax.set_xlabel("longitude (deg)")
    ax.set_ylabel("latitude (deg)")
    ax.set_xlim(lon_deg[0], lon_deg[-1])
    ax.set_ylim(lat_deg[0], lat_deg[-1])
    fig.tight_layout()
    return save_figure(fig, out_stem)
