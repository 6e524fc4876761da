"""Stabiliser polytope membership, distance monotone and Clifford orbits.

The single-qubit stabiliser states form the unit l1 ball (octahedron) in
Bloch coordinates.  This module provides the membership test, the
trace-distance monotone to the polytope, the Clifford orbits of the two
canonical magic directions, and their closed-form alignment factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import SQRT2, SQRT3, STRUCTURAL_TOL
from .geometry import project_l1_ball, sign_vectors

_T_DIRECTIONS = sign_vectors() / SQRT3


def _h_directions() -> np.ndarray:
    out = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for si in (-1.0, 1.0):
            for sj in (-1.0, 1.0):
                v = np.zeros(3)
                v[i] = si / SQRT2
                v[j] = sj / SQRT2
                out.append(v)
    return np.array(out)


_H_DIRECTIONS = _h_directions()


def is_stabiliser(r: np.ndarray, tol: float = STRUCTURAL_TOL) -> bool:
    """True iff the Bloch vector r lies in the octahedron ||r||_1 <= 1 + tol."""
    r = np.asarray(r, dtype=float)
    return bool(np.abs(r).sum() <= 1.0 + tol)


def nonstabiliserness(r: np.ndarray) -> float:
    """Minimal trace distance from the state with Bloch vector r to the polytope.

    For qubits the trace distance is half the Euclidean distance between
    Bloch vectors, so this is 0.5 * ||r - P(r)||_2 with P the l1-ball
    projection.  Zero iff r is a stabiliser state.  The extremal-Hamiltonian
    module works with the raw (unhalved) Bloch distance instead.
    """
    r = np.asarray(r, dtype=float)
    return 0.5 * float(np.linalg.norm(r - project_l1_ball(r)))


def orbit_directions(orbit: str) -> np.ndarray:
    """Bloch directions of the Clifford orbit of the T or H magic state.

    'T' returns the 8 sign patterns of (1,1,1)/sqrt(3); 'H' returns the 12
    signed coordinate-pair directions of (1,0,1)/sqrt(2).
    """
    if orbit == "T":
        return _T_DIRECTIONS.copy()
    if orbit == "H":
        return _H_DIRECTIONS.copy()
    raise ValueError(f"unknown orbit {orbit!r}; expected 'T' or 'H'")


def orbit_geometric_factor(n: np.ndarray, orbit: str) -> float:
    """max_u |n . u| over the orbit, in closed form.

    Equals ||n||_1 / sqrt(3) for the T orbit and (|n|_(1) + |n|_(2)) / sqrt(2)
    for the H orbit, where |n|_(i) are the components sorted by decreasing
    magnitude.
    """
    a = np.abs(np.asarray(n, dtype=float))
    if orbit == "T":
        return float(a.sum() / SQRT3)
    if orbit == "H":
        a = np.sort(a)[::-1]
        return float((a[0] + a[1]) / SQRT2)
    raise ValueError(f"unknown orbit {orbit!r}; expected 'T' or 'H'")


@dataclass(frozen=True)
class DistillThresholds:
    """Distillation fidelity thresholds for the T and H orbits.

    Defaults are the protocol-dependent values 0.91 and 0.93; both sit
    strictly above the corresponding stabiliser fidelity.
    """

    f_thr_t: float = 0.91
    f_thr_h: float = 0.93

    def for_orbit(self, orbit: str) -> float:
        if orbit == "T":
            return self.f_thr_t
        if orbit == "H":
            return self.f_thr_h
        raise ValueError(f"unknown orbit {orbit!r}; expected 'T' or 'H'")


def stabiliser_fidelity_threshold(u: np.ndarray) -> float:
    """Fidelity below which a depolarised pure state along u is stabiliser.

    The state with Bloch vector (2f-1) u enters the octahedron once
    (2f-1) ||u||_1 <= 1, i.e. at f = (1 + 1/||u||_1) / 2.
    """
    l1 = float(np.abs(np.asarray(u, dtype=float)).sum())
    if l1 == 0.0:
        return 1.0
    return 0.5 * (1.0 + min(1.0, 1.0 / l1))
