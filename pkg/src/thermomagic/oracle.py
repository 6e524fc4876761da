"""Brute-force validators for the closed-form machinery.

Everything here avoids the support-coefficient shortcuts on purpose: circle
supports are maximised by scanning azimuths, the reachable-set witness by
evaluating l1 norms on a dense boundary grid, and the l1 projection by
sampling octahedron facets.  Shipped with the library so `--verify` can
cross-check any CLI computation.
"""

from __future__ import annotations

import numpy as np

from .constants import DEGENERATE_GAP
from .geometry import golden_section_max
from .thermal import (
    EnergyFrameState,
    HamiltonianDirection,
    ThermalContext,
    coherence_cap,
    reachable_interval,
)


def azimuth_scan(
    R: np.ndarray,
    r_perp: float,
    z_axial: float,
    n_phi: int = 10_000,
    refine: bool = True,
) -> float:
    """max over azimuths of || R^T (r_perp cos phi, r_perp sin phi, z) ||_1.

    A uniform scan of n_phi azimuths localises the maximum; golden-section
    refinement inside the best scan cell then removes the O(dphi^2) grid bias
    (the objective is smooth at its maxima; its kinks point upwards).  Only
    direct l1 evaluations are used.
    """
    if r_perp < 0.0:
        raise ValueError("transverse radius must be nonnegative")
    m = np.asarray(R, dtype=float).T

    def values(phi):
        phi = np.asarray(phi, dtype=float)
        x = r_perp * np.cos(phi)
        y = r_perp * np.sin(phi)
        pts = (
            x[..., None] * m[:, 0]
            + y[..., None] * m[:, 1]
            + z_axial * m[:, 2]
        )
        return np.abs(pts).sum(axis=-1)

    phis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    vals = values(phis)
    best = float(vals.max())
    if not refine:
        return best
    i = int(vals.argmax())
    width = 2.0 * np.pi / n_phi
    a = np.array([phis[i] - width])
    b = np.array([phis[i] + width])
    _, fref = golden_section_max(values, a, b, iters=60)
    return max(best, float(fref[0]))


def _boundary_l1(
    qs: np.ndarray,
    phis: np.ndarray,
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
) -> np.ndarray:
    """l1 norms of lab-frame boundary points on the (q, phi) grid."""
    caps = np.atleast_1d(coherence_cap(qs, state.p, state.c, ctx))
    z = 2.0 * qs - 1.0
    m = H.rotation.T
    cos_p = np.cos(phis)
    sin_p = np.sin(phis)
    total = np.zeros((len(qs), len(phis)))
    for i in range(3):
        comp = (
            caps[:, None] * (m[i, 0] * cos_p + m[i, 1] * sin_p)[None, :]
            + z[:, None] * m[i, 2]
        )
        total += np.abs(comp)
    return total


def cone_sample_witness(
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
    n_q: int = 1024,
    n_phi: int = 1024,
    refine_rounds: int = 3,
):
    """Dense l1 scan of the reachable-set boundary.

    Returns (exceeds, max_l1): whether any sampled boundary point leaves the
    octahedron, and the largest l1 norm found.  The q grid is uniform over
    the reachable interval plus geometric clusters at both endpoints (the
    boundary radius has square-root behaviour there) and the |2q-1| kink;
    after the coarse pass the winning cell is re-sampled on shrinking
    subgrids.  The sampled maximum approaches the witness value from below.
    """
    if n_q < 64 or n_phi < 64:
        raise ValueError("need n_q >= 64 and n_phi >= 64")
    iv = reachable_interval(state.p, ctx)
    lo, hi = iv.lo, iv.hi
    if hi - lo <= 2.0 * DEGENERATE_GAP:
        qs = np.array([state.p])
    else:
        width = hi - lo
        offsets = width * 10.0 ** np.arange(-12.0, -1.0)
        qs = np.concatenate(
            [np.linspace(lo, hi, n_q), lo + offsets, hi - offsets]
        )
        if lo < 0.5 < hi:
            qs = np.append(qs, 0.5)
        qs = np.unique(np.clip(qs, lo, hi))
    phis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    vals = _boundary_l1(qs, phis, state, H, ctx)
    flat = int(vals.argmax())
    best = float(vals.flat[flat])
    qi, pj = np.unravel_index(flat, vals.shape)
    q_best, phi_best = qs[qi], phis[pj]
    dq = (hi - lo) / max(n_q - 1, 1)
    dphi = 2.0 * np.pi / n_phi
    for _ in range(refine_rounds):
        sub_q = np.clip(np.linspace(q_best - dq, q_best + dq, 64), lo, hi)
        sub_phi = np.linspace(phi_best - dphi, phi_best + dphi, 64)
        sub = _boundary_l1(np.unique(sub_q), sub_phi, state, H, ctx)
        flat = int(sub.argmax())
        if float(sub.flat[flat]) > best:
            best = float(sub.flat[flat])
            qi, pj = np.unravel_index(flat, sub.shape)
            q_best, phi_best = np.unique(sub_q)[qi], sub_phi[pj]
        dq /= 32.0
        dphi /= 32.0
    return best > 1.0, best


def facet_distance_scan(point: np.ndarray, n_grid: int = 400) -> float:
    """Distance from a point to the l1 ball by sampling the octahedron boundary.

    Returns 0 for interior points; otherwise the minimum Euclidean distance
    to a dense barycentric sampling of all eight facets.  Upper-bounds the
    exact projection distance and converges to it as the grid refines.
    """
    point = np.asarray(point, dtype=float)
    if np.abs(point).sum() <= 1.0:
        return 0.0
    ts = np.linspace(0.0, 1.0, n_grid)
    u, v = np.meshgrid(ts, ts)
    keep = u + v <= 1.0
    u, v = u[keep], v[keep]
    w = 1.0 - u - v
    best = np.inf
    for sx in (-1.0, 1.0):
        for sy in (-1.0, 1.0):
            for sz in (-1.0, 1.0):
                pts = np.column_stack([sx * u, sy * v, sz * w])
                d = np.linalg.norm(pts - point, axis=1).min()
                best = min(best, float(d))
    return best
