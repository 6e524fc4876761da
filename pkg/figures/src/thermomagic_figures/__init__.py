"""Read-only plotting layer for thermomagic CLI outputs.

Consumes the primary toolkit's CSV files (threshold sweeps, distillability
landscapes, reachable-set meshes) and renders publication-style figures.
No physics is recomputed here beyond l1 norms of recorded coordinates.
"""

__version__ = "0.1.0"

from .cone_render import plot_cone
from .critical_curves import plot_critical_curves
from .landscape_map import plot_landscape

__all__ = ["plot_critical_curves", "plot_landscape", "plot_cone"]
