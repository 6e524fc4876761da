"""Worst-case Hamiltonian orientation for escaping the octahedron.

For an energy-diagonal input the reachable endpoint lies at radius m along
the Hamiltonian direction, so the most magic-generating orientation solves
max over unit n of the Euclidean distance from m*n to the l1 ball.  The
closed form is 0 for m <= 1/sqrt(3) and m - 1/sqrt(3) past it, attained at
the eight diagonal directions; a Fibonacci-sphere brute force serves as the
independent check.  Distances here are raw Bloch Euclidean distances (twice
the trace-distance monotone).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import SQRT3
from .geometry import project_l1_ball


@dataclass(frozen=True)
class ExtremalResult:
    value: float
    directions: np.ndarray
    m: float


def v_closed_form(m: float) -> float:
    """Distance from the farthest point m*n to the l1 ball, optimised over n."""
    if m < 0.0:
        raise ValueError("radius m must be nonnegative")
    if m <= 1.0 / SQRT3:
        return 0.0
    return m - 1.0 / SQRT3


def fibonacci_sphere(n: int) -> np.ndarray:
    """n near-uniform unit vectors from the Fibonacci lattice (deterministic)."""
    if n < 1:
        raise ValueError("need at least one direction")
    i = np.arange(n)
    y = 1.0 - 2.0 * (i + 0.5) / n
    r = np.sqrt(np.clip(1.0 - y * y, 0.0, None))
    phi = np.pi * (3.0 - np.sqrt(5.0)) * i
    return np.column_stack([r * np.cos(phi), y, r * np.sin(phi)])


def distance_to_l1_ball(points: np.ndarray) -> np.ndarray:
    """Euclidean distance from each point to the unit l1 ball (0 inside)."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    return np.linalg.norm(points - project_l1_ball(points), axis=-1)


def v_brute_force(m: float, n_dirs: int = 10_000) -> ExtremalResult:
    """Sampled max-min: scan Fibonacci directions instead of the closed form.

    Returns the largest sampled distance and every direction within 1e-6 of
    it.  The sampled value approaches the closed form from below as n_dirs
    grows.
    """
    if n_dirs < 1000:
        raise ValueError("need at least 1000 directions")
    dirs = fibonacci_sphere(n_dirs)
    d = distance_to_l1_ball(m * dirs)
    best = float(d.max())
    return ExtremalResult(value=best, directions=dirs[d >= best - 1e-6], m=m)


def optimal_hamiltonian() -> np.ndarray:
    """Canonical optimal direction (1,1,1)/sqrt(3).

    All eight sign patterns (+-1, +-1, +-1)/sqrt(3) are equally optimal; this
    returns the representative in the positive octant.  Its l1 norm sqrt(3)
    is the ceiling of the incoherent witness prefactor.
    """
    return np.full(3, 1.0 / SQRT3)


def thermodynamic_radius(p: float, beta: float, gap: float = 2.0) -> float:
    """Extreme reachable Bloch radius |1 - 2 p exp(-beta*gap)| along the axis."""
    if beta < 0.0:
        raise ValueError("inverse temperature must be nonnegative")
    return abs(1.0 - 2.0 * p * np.exp(-beta * gap))
