"""3-D render of a reachable-set boundary mesh with the stabiliser octahedron.

Cells whose l1 norm exceeds 1 (recomputed from the mesh coordinates alone)
are shaded as the produced-magic region.  Degenerate meshes with no
transverse extent render as an axis segment.  Three viewing angles.
"""

from __future__ import annotations

import itertools

import matplotlib.pyplot as plt
import numpy as np

from .io import read_mesh
from .style import apply_style, save_figure

_VIEWS = ((18, -60), (18, 30), (62, -90))


def _octahedron_edges():
    vertices = [v for i in range(3) for v in (np.eye(3)[i], -np.eye(3)[i])]
    for a, b in itertools.combinations(vertices, 2):
        if abs(float(a @ b)) < 0.5:  # skip antipodal pairs
            yield a, b


def plot_cone(csv_path: str, out_stem: str) -> list[str]:
    """Render the mesh; returns the written file paths (PNG and SVG)."""
    mesh = read_mesh(csv_path)
    pts = mesh.points
    degenerate = pts.shape[0] == 1 or np.allclose(
        pts, pts[:, :1, :], atol=1e-10
    )
    apply_style()
    fig = plt.figure(figsize=(9.0, 3.2))
    for k, (elev, azim) in enumerate(_VIEWS, start=1):
        ax = fig.add_subplot(1, 3, k, projection="3d")
        for a, b in _octahedron_edges():
            ax.plot(*zip(a, b), color="0.45", linewidth=0.8)
        if degenerate:
            axis_pts = pts[:, 0, :]
            ax.plot(
                axis_pts[:, 0],
                axis_pts[:, 1],
                axis_pts[:, 2],
                color="#1f77b4",
                linewidth=2.0,
            )
        else:
            # close the azimuthal seam for the surface
            closed = np.concatenate([pts, pts[:, :1, :]], axis=1)
            magic = np.abs(closed).sum(axis=2) > 1.0
            colours = np.where(
                magic[..., None], (0.95, 0.8, 0.1, 1.0), (0.2, 0.45, 0.75, 1.0)
            )
            ax.plot_surface(
                closed[:, :, 0],
                closed[:, :, 1],
                closed[:, :, 2],
                facecolors=colours[:-1, :-1],
                shade=False,
                linewidth=0,
                antialiased=False,
            )
        ax.view_init(elev=elev, azim=azim)
        ax.set_xlim(-1, 1)
        ax.set_ylim(-1, 1)
        ax.set_zlim(-1, 1)
        ax.set_box_aspect((1, 1, 1))
        ax.set_axis_off()
    fig.tight_layout()
    return save_figure(fig, out_stem)
