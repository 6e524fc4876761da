"""Bloch-frame geometry.

Rotations that align a Hamiltonian direction with the z axis, the eight
octant support coefficients of the rotated frame, the maximum l1 norm over
a horizontal circle, and Euclidean projection onto the unit l1 ball.
All functions are pure and operate on plain numpy arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .constants import INVPHI

_SIGNS = np.array(list(itertools.product((-1.0, 1.0), repeat=3)))

# Transverse magnitude below which a downward direction counts as the exact
# antipode; the fixed half-turn then meets the alignment tolerance itself.
_ANTIPODAL_TRANSVERSE_TOL = 1e-12


def sign_vectors() -> np.ndarray:
    """All eight sign vectors s in {-1,+1}^3, one per octant, in a fixed order."""
    return _SIGNS.copy()


def unit_vector(x: float, y: float, z: float) -> np.ndarray:
    """Normalise (x, y, z) to a unit vector; rejects the zero vector."""
    v = np.array([x, y, z], dtype=float)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("direction vector must be nonzero")
    return v / n


def _check_unit(n: np.ndarray) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError("expected a 3-vector")
    if abs(np.linalg.norm(n) - 1.0) > 1e-9:
        raise ValueError("expected a unit vector")
    return n


def rotation_to_z(n: np.ndarray) -> np.ndarray:
    """Proper rotation R in SO(3) with R @ n = (0, 0, 1).

    The construction is canonical so results are reproducible: a rotation
    about z brings n into the x-z half-plane, a rotation about y lifts it to
    the pole.  The antipode -z (no transverse part to fix the azimuth) gets
    a fixed half-turn about x.  Quantities computed downstream from R are
    invariant under any other valid choice of R.
    """
    n = _check_unit(n)
    s = np.hypot(n[0], n[1])
    if n[2] < 0.0 and s <= _ANTIPODAL_TRANSVERSE_TOL:
        return np.array([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]])
    phi = np.arctan2(n[1], n[0])
    theta = np.arctan2(s, n[2])
    rz = np.array(
        [
            [np.cos(phi), np.sin(phi), 0.0],
            [-np.sin(phi), np.cos(phi), 0.0],
            [0.0, 0.0, 1.0],
        ]
    )
    ry = np.array(
        [
            [np.cos(theta), 0.0, -np.sin(theta)],
            [0.0, 1.0, 0.0],
            [np.sin(theta), 0.0, np.cos(theta)],
        ]
    )
    return ry @ rz


@dataclass(frozen=True)
class SupportCoefficients:
    """Octant support weights of a rotated frame.

    For each sign vector s the transverse weight is
    alpha_s = sqrt((s.m1)^2 + (s.m2)^2) and the axial weight h_s = s.m3,
    where m1, m2, m3 are the columns of M = R^T.  Orthogonality of M gives
    alpha_s^2 + h_s^2 = 3 for every s.
    """

    signs: np.ndarray
    alpha: np.ndarray
    h: np.ndarray


def support_coefficients(R: np.ndarray) -> SupportCoefficients:
    """Transverse/axial support weights (alpha_s, h_s) for all eight octants."""
    R = np.asarray(R, dtype=float)
    if R.shape != (3, 3) or np.max(np.abs(R.T @ R - np.eye(3))) > 1e-9:
        raise ValueError("expected an orthogonal 3x3 matrix")
    proj = _SIGNS @ R.T  # row s gives (s.m1, s.m2, s.m3) for M = R^T
    alpha = np.hypot(proj[:, 0], proj[:, 1])
    h = proj[:, 2]
    return SupportCoefficients(signs=_SIGNS.copy(), alpha=alpha, h=h)


def circle_l1_support(
    coeffs: SupportCoefficients, r_perp: float, z_axial: float
) -> float:
    """Maximum l1 norm over the lab-frame image of a horizontal Bloch circle.

    The circle has transverse radius ``r_perp`` at height ``z_axial`` in the
    rotated frame; the maximum over azimuths collapses to a maximum over the
    eight octants of r_perp * alpha_s + |z_axial| * |h_s|.
    """
    if r_perp < 0.0:
        raise ValueError("transverse radius must be nonnegative")
    return float(np.max(r_perp * coeffs.alpha + abs(z_axial) * np.abs(coeffs.h)))


def project_l1_ball(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x in R^3 : ||x||_1 <= 1}.

    Accepts a single 3-vector or an (..., 3) stack.  Points already inside
    the ball are returned unchanged.  Uses the sort-based simplex projection
    on |v| followed by sign restoration, which is exact.
    """
    v = np.asarray(v, dtype=float)
    a = np.abs(v)
    inside = a.sum(axis=-1) <= 1.0
    u = np.sort(a, axis=-1)[..., ::-1]
    cs = np.cumsum(u, axis=-1)
    j = np.arange(1, 4, dtype=float)
    rho = np.count_nonzero(u - (cs - 1.0) / j > 0.0, axis=-1)
    rho = np.maximum(rho, 1)
    theta = (np.take_along_axis(cs, rho[..., None] - 1, axis=-1)[..., 0] - 1.0) / rho
    w = np.maximum(a - theta[..., None], 0.0)
    return np.where(inside[..., None], v, np.sign(v) * w)


def golden_section_max(f, a, b, iters: int = 40):
    """Vectorised golden-section maximisation of elementwise-unimodal ``f``.

    ``a`` and ``b`` are arrays of bracket endpoints; ``f`` maps an array of
    abscissae to objective values of the same shape.  Returns (x, f(x)) at
    the midpoint of the shrunken brackets.  One function evaluation per
    iteration (interior points are reused); the iteration count is fixed so
    results are deterministic.
    """
    a = np.asarray(a, dtype=float).copy()
    b = np.asarray(b, dtype=float).copy()
    h = b - a
    x1 = a + (1.0 - INVPHI) * h
    x2 = a + INVPHI * h
    f1 = np.asarray(f(x1), dtype=float)
    f2 = np.asarray(f(x2), dtype=float)
    for _ in range(iters):
        keep_left = f1 >= f2
        a = np.where(keep_left, a, x1)
        b = np.where(keep_left, x2, b)
        h = b - a
        x1n = a + (1.0 - INVPHI) * h
        x2n = a + INVPHI * h
        x_eval = np.where(keep_left, x1n, x2n)
        fe = np.asarray(f(x_eval), dtype=float)
        f1, f2 = np.where(keep_left, fe, f2), np.where(keep_left, f1, fe)
        x1, x2 = x1n, x2n
    xm = 0.5 * (a + b)
    return xm, np.asarray(f(xm), dtype=float)
