"""Catalytic extension: free-energy ordering for correlated-catalyst reachability.

With a correlated catalyst the population-coherence budget of plain thermal
operations is replaced by a single second law, F_beta(target) <=
F_beta(source) with F_beta = <H> - S/beta, plus mode inclusion (a coherent
target needs a coherent source).  For targets diagonal in the energy basis
the critical inverse temperature reduces to a one-variable feasibility scan
along the axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import golden_section_max
from .thermal import EnergyFrameState, HamiltonianDirection

FREE_ENERGY_SLACK = 1e-12


@dataclass(frozen=True)
class FreeEnergy:
    """Nonequilibrium free energy E - S/beta (entropy in nats)."""

    value: float
    beta: float
    energy: float
    entropy: float


def _binary_entropy_from_radius(rnorm: np.ndarray) -> np.ndarray:
    rnorm = np.clip(rnorm, 0.0, 1.0)
    lam_p = 0.5 * (1.0 + rnorm)
    lam_m = 0.5 * (1.0 - rnorm)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(lam_p > 0.0, lam_p * np.log(lam_p), 0.0) + np.where(
            lam_m > 0.0, lam_m * np.log(lam_m), 0.0
        )
    return -terms


def free_energy(
    state: EnergyFrameState, H: HamiltonianDirection, beta: float
) -> FreeEnergy:
    """F_beta of a qubit state given in the energy frame.

    The ground level sits at -gap/2, so E = (gap/2)(1 - 2p); the entropy uses
    the eigenvalues (1 +- r)/2 with r = sqrt((2p-1)^2 + 4c^2).
    """
    if beta <= 0.0:
        raise ValueError("free energy needs beta > 0")
    energy = 0.5 * H.gap * (1.0 - 2.0 * state.p)
    rnorm = np.sqrt((2.0 * state.p - 1.0) ** 2 + 4.0 * state.c**2)
    entropy = float(_binary_entropy_from_radius(np.asarray(rnorm)))
    return FreeEnergy(
        value=energy - entropy / beta, beta=beta, energy=energy, entropy=entropy
    )


def _diagonal_free_energy(q, gap: float, beta: float):
    """F_beta of diagonal states with ground population q (vectorised)."""
    q = np.asarray(q, dtype=float)
    energy = 0.5 * gap * (1.0 - 2.0 * q)
    entropy = _binary_entropy_from_radius(np.abs(2.0 * q - 1.0))
    return energy - entropy / beta


def catalytic_reachable(
    source: EnergyFrameState,
    target: EnergyFrameState,
    H: HamiltonianDirection,
    beta: float,
) -> bool:
    """Free-energy order plus mode inclusion for the qubit one-mode case."""
    if target.c > 0.0 and source.c == 0.0:
        return False
    fs = free_energy(source, H, beta).value
    ft = free_energy(target, H, beta).value
    return ft <= fs + FREE_ENERGY_SLACK


def _coherent_boundary_free_energy(q, H: HamiltonianDirection, beta: float):
    """F_beta of the least-coherent magic state at each population q.

    The smallest transverse radius leaving the octahedron at the best phase
    is r_min(q) = min over octants of (1 - |2q-1| |h_s|) / alpha_s; entries
    where r_min exceeds the physical radius sqrt(q(1-q)) are +inf (no magic
    state there).  Adding coherence only raises F, so this boundary value is
    the relevant one for feasibility.
    """
    from .witness import octant_weights

    q = np.asarray(q, dtype=float)
    _, alpha, h = octant_weights(H.n)
    pos = alpha > 1e-12
    alpha, habs = alpha[pos], np.abs(h[pos])
    z0 = np.abs(2.0 * q - 1.0)
    r_min = np.min(
        (1.0 - z0[..., None] * habs[None, :]) / alpha[None, :], axis=-1
    )
    r_min = np.maximum(r_min, 0.0)
    r_phys = np.sqrt(np.clip(q * (1.0 - q), 0.0, None))
    energy = 0.5 * H.gap * (1.0 - 2.0 * q)
    rnorm = np.sqrt((2.0 * q - 1.0) ** 2 + 4.0 * r_min**2)
    entropy = _binary_entropy_from_radius(rnorm)
    out = energy - entropy / beta
    return np.where(r_min <= r_phys + 1e-12, out, np.inf)


def _feasible(
    source: EnergyFrameState, H: HamiltonianDirection, beta: float, n_z: int
) -> bool:
    """Is some magic target free-energy reachable at this beta?

    Diagonal targets (allowed for every source) need |z| ||n||_1 > 1; each
    admissible z segment is scanned on a grid and the best cell refined by
    golden section.  A coherent source additionally admits coherent targets
    (mode inclusion holds), checked on the minimal-coherence magic boundary
    over all populations.
    """
    l1 = float(np.abs(H.n).sum())
    zb = 1.0 / l1
    fs = free_energy(source, H, beta).value
    half = max(n_z // 2, 8)
    segments = ((zb, 1.0), (-1.0, -zb)) if zb < 1.0 else ()
    for seg in segments:
        zs = np.linspace(seg[0], seg[1], half)
        qs = 0.5 * (1.0 + zs)
        f = _diagonal_free_energy(qs, H.gap, beta)
        i = int(np.argmin(f))
        if f[i] <= fs + FREE_ENERGY_SLACK:
            return True
        a = zs[max(i - 1, 0)]
        b = zs[min(i + 1, len(zs) - 1)]
        _, fmax = golden_section_max(
            lambda z: -_diagonal_free_energy(0.5 * (1.0 + np.asarray(z)), H.gap, beta),
            np.array([a]),
            np.array([b]),
            iters=50,
        )
        if -fmax[0] <= fs + FREE_ENERGY_SLACK:
            return True
    if source.c > 0.0:
        qs = np.linspace(0.0, 1.0, max(n_z, 16))
        f = _coherent_boundary_free_energy(qs, H, beta)
        i = int(np.argmin(f))
        if f[i] <= fs + FREE_ENERGY_SLACK:
            return True
        if np.isfinite(f[i]):
            a = qs[max(i - 1, 0)]
            b = qs[min(i + 1, len(qs) - 1)]
            _, fmax = golden_section_max(
                lambda q: -_coherent_boundary_free_energy(np.asarray(q), H, beta),
                np.array([a]),
                np.array([b]),
                iters=50,
            )
            if -fmax[0] <= fs + FREE_ENERGY_SLACK:
                return True
    return False


def catalytic_critical_beta(
    source: EnergyFrameState,
    H: HamiltonianDirection,
    beta_max: float = 10.0,
    n_scan: int = 2000,
    n_z: int = 1024,
    tol: float = 1e-8,
) -> float | None:
    """Smallest beta at which some magic target passes the free-energy test.

    Incoherent sources admit diagonal targets only (mode inclusion), so the
    search is a one-variable scan along the axis; coherent sources also
    admit coherent targets, checked on the minimal-coherence magic boundary.
    Feasibility is monotone in beta, giving a scan-plus-bisection root.
    Returns None when no admissible target outside the octahedron ever
    becomes reachable; along a Pauli axis the axis never leaves the
    octahedron and incoherent sources get None.
    """
    if beta_max <= 0.0:
        raise ValueError("beta_max must be positive")
    l1 = float(np.abs(H.n).sum())
    if l1 <= 1.0 + 1e-12 and source.c == 0.0:
        # diagonal targets stay on the axis, which never leaves the octahedron
        return None
    tiny = min(1e-9, beta_max / n_scan)
    if _feasible(source, H, tiny, n_z):
        return 0.0
    betas = np.linspace(0.0, beta_max, n_scan)
    prev = tiny
    for beta in betas[1:]:
        if _feasible(source, H, beta, n_z):
            a, b = prev, beta
            while b - a > tol:
                mid = 0.5 * (a + b)
                if _feasible(source, H, mid, n_z):
                    b = mid
                else:
                    a = mid
            return 0.5 * (a + b)
        prev = beta
    return None
