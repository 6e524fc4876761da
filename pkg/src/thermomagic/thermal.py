"""Thermal-operation reachability for a single qubit.

A qubit with Hamiltonian direction n and energy gap ``gap`` exchanges energy
with a bath at inverse temperature beta.  Populations then move inside an
interval fixed by the Gibbs weight, and the retained coherence at a target
population q is capped by

    c_max(q) = |c| sqrt([q(1-g) - g(1-p)] [p(1-g) - g(1-q)]) / |p - g|

with g the Gibbs ground population.  The reachable set is a convex body of
revolution about the energy axis ("future thermal cone"); this module
provides the interval, the cap, the membership test and boundary meshes.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .constants import DEGENERATE_GAP, INTERVAL_TOL, RADICAND_FLOOR, STRUCTURAL_TOL
from .geometry import rotation_to_z, unit_vector


@dataclass(frozen=True)
class EnergyFrameState:
    """Qubit state in the energy eigenframe.

    ``p`` is the ground population, ``c`` the magnitude of the coherence and
    ``phase`` its optional azimuth.  Positivity requires c <= sqrt(p(1-p)).
    """

    p: float
    c: float = 0.0
    phase: float | None = None

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"population p={self.p} outside [0, 1]")
        if self.c < 0.0:
            raise ValueError("coherence magnitude must be nonnegative")
        if self.c > np.sqrt(max(self.p * (1.0 - self.p), 0.0)) + STRUCTURAL_TOL:
            raise ValueError(
                f"coherence c={self.c} violates positivity for p={self.p}"
            )


@dataclass(frozen=True)
class HamiltonianDirection:
    """Unit Bloch direction of the Hamiltonian plus its energy gap (default 2).

    The gap fixes the Boltzmann exponent: the Gibbs ground weight is
    1 / (1 + exp(-beta * gap)).
    """

    n: np.ndarray
    gap: float = 2.0

    def __post_init__(self):
        v = np.asarray(self.n, dtype=float)
        object.__setattr__(self, "n", unit_vector(*v))
        if self.gap <= 0.0:
            raise ValueError("energy gap must be positive")

    @property
    def rotation(self) -> np.ndarray:
        """Rotation sending the direction onto +z."""
        return rotation_to_z(self.n)


def gibbs_population(beta: float, gap: float = 2.0) -> float:
    """Gibbs ground-state weight gamma = 1 / (1 + exp(-beta * gap)).

    beta must be nonnegative (negative temperatures are out of scope) and the
    gap positive; gamma runs from 1/2 at beta = 0 towards 1.
    """
    if beta < 0.0:
        raise ValueError("inverse temperature must be nonnegative")
    if gap <= 0.0:
        raise ValueError("energy gap must be positive")
    return 1.0 / (1.0 + np.exp(-beta * gap))


@dataclass(frozen=True)
class ThermalContext:
    """Inverse temperature together with the derived Gibbs ground weight."""

    beta: float
    gamma: float

    @classmethod
    def create(cls, beta: float, gap: float = 2.0) -> "ThermalContext":
        return cls(beta=beta, gamma=gibbs_population(beta, gap))

    @property
    def boltzmann(self) -> float:
        """exp(-beta * gap), recovered as (1 - gamma) / gamma."""
        return (1.0 - self.gamma) / self.gamma


@dataclass(frozen=True)
class PopulationInterval:
    lo: float
    hi: float

    def contains(self, q, tol: float = INTERVAL_TOL):
        return (np.asarray(q) >= self.lo - tol) & (np.asarray(q) <= self.hi + tol)

    def clamp(self, q):
        return np.clip(q, self.lo, self.hi)

    @property
    def length(self) -> float:
        return self.hi - self.lo


def reachable_interval(p: float, ctx: ThermalContext) -> PopulationInterval:
    """Ground populations reachable from p: [min(p, q*), max(p, q*)].

    q* = 1 - ((1 - gamma)/gamma) p is the extreme population on the far side
    of the Gibbs point; the interval degenerates to {p} when p = gamma.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"population p={p} outside [0, 1]")
    q_star = 1.0 - ctx.boltzmann * p
    return PopulationInterval(lo=min(p, q_star), hi=max(p, q_star))


def coherence_cap(q, p: float, c: float, ctx: ThermalContext):
    """Largest coherence magnitude retainable at target population q.

    q may be a scalar or an array; every entry must lie in the reachable
    interval (within a small slack, after which it is clamped).  At q = p the
    cap equals |c| exactly.  When |p - gamma| <= 1e-9 the interval is
    degenerate and the cap is |c| at q = p and zero elsewhere, the limit of
    the closed form along q = p.
    """
    q = np.asarray(q, dtype=float)
    scalar = q.ndim == 0
    q = np.atleast_1d(q)
    gamma = ctx.gamma
    iv = reachable_interval(p, ctx)
    if np.any(~iv.contains(q)):
        bad = q[~iv.contains(q)]
        raise ValueError(
            f"target population {bad[0]} outside the reachable interval "
            f"[{iv.lo}, {iv.hi}]"
        )
    if abs(p - gamma) <= DEGENERATE_GAP:
        out = np.where(np.abs(q - p) <= INTERVAL_TOL, abs(c), 0.0)
        return float(out[0]) if scalar else out

    qc = iv.clamp(q)
    a = qc * (1.0 - gamma) - gamma * (1.0 - p)
    b = p * (1.0 - gamma) - gamma * (1.0 - qc)
    rad = a * b
    # endpoint rounding can push the radicand a hair below zero (never past
    # RADICAND_FLOOR once q is clamped); flush it so sqrt stays NaN-free
    rad = np.maximum(rad, 0.0)
    out = abs(c) * np.sqrt(rad) / abs(p - gamma)
    # the identity cap(p) = |c| holds exactly; avoid rounding through the quotient
    out = np.where(q == p, abs(c), out)
    return float(out[0]) if scalar else out


def cone_contains(
    v: np.ndarray,
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
    tol: float = INTERVAL_TOL,
):
    """Membership of lab-frame Bloch points in the reachable set.

    Decomposes v into population q = (1 + v.n)/2 and transverse radius, then
    checks q against the reachable interval (within tol) and the radius
    against the coherence cap (within tol).  Accepts a 3-vector or an
    (N, 3) stack; returns a bool or a bool array.
    """
    v = np.asarray(v, dtype=float)
    scalar = v.ndim == 1
    pts = np.atleast_2d(v)
    axial = pts @ H.n
    q = 0.5 * (1.0 + axial)
    r_perp = np.linalg.norm(pts - axial[:, None] * H.n[None, :], axis=1)
    iv = reachable_interval(state.p, ctx)
    ok_q = iv.contains(q, tol)
    caps = np.zeros_like(q)
    qin = iv.clamp(q[ok_q])
    caps_in = coherence_cap(qin, state.p, state.c, ctx)
    caps[ok_q] = caps_in
    ok = ok_q & (r_perp <= caps + tol)
    return bool(ok[0]) if scalar else ok


@dataclass(frozen=True)
class ConeMesh:
    """Boundary samples of the reachable set, stored ring by ring.

    ``points[i, j]`` is the lab-frame Bloch vector at population ``q[i]`` and
    azimuth ``phi[j]``; the transverse radius of ring i is the coherence cap
    at q[i].
    """

    q: np.ndarray
    phi: np.ndarray
    points: np.ndarray
    n_q: int
    n_phi: int

    def to_csv(self, path=None) -> str | None:
        """Write rows q,phi,x,y,z (q-major) with 17 significant digits."""
        buf = io.StringIO()
        buf.write("q,phi,x,y,z\n")
        fmt = "%.17g"
        for i, qi in enumerate(self.q):
            for j, pj in enumerate(self.phi):
                x, y, z = self.points[i, j]
                buf.write(
                    ",".join(fmt % val for val in (qi, pj, x, y, z)) + "\n"
                )
        text = buf.getvalue()
        if path is None:
            return text
        with open(path, "w", newline="") as fh:
            fh.write(text)
        return None


def cone_mesh(
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
    n_q: int = 64,
    n_phi: int = 96,
) -> ConeMesh:
    """Sample the boundary of the reachable set on an (n_q, n_phi) grid.

    Populations are uniform over the reachable interval and azimuths uniform
    over [0, 2pi).  A degenerate interval produces a single ring at q = p.
    Every emitted point passes the membership test at tolerance 1e-10.
    """
    if n_q < 2 or n_phi < 3:
        raise ValueError("need n_q >= 2 and n_phi >= 3")
    iv = reachable_interval(state.p, ctx)
    if iv.length <= DEGENERATE_GAP:
        qs = np.array([state.p])
    else:
        qs = np.linspace(iv.lo, iv.hi, n_q)
    phis = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    caps = np.atleast_1d(coherence_cap(qs, state.p, state.c, ctx))
    m = H.rotation.T
    local = np.empty((len(qs), len(phis), 3))
    local[:, :, 0] = caps[:, None] * np.cos(phis)[None, :]
    local[:, :, 1] = caps[:, None] * np.sin(phis)[None, :]
    local[:, :, 2] = (2.0 * qs - 1.0)[:, None]
    points = local @ m.T
    return ConeMesh(
        q=qs, phi=phis, points=points, n_q=len(qs), n_phi=len(phis)
    )
