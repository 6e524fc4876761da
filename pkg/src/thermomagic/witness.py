"""Generation witness for nonstabiliserness under thermal operations.

The largest l1 norm over the thermally reachable set factorises into a
one-dimensional maximisation over target populations q and a discrete
maximisation over the eight octant sign vectors:

    M = max_q max_s ( c_max(q) * alpha_s + |2q - 1| * |h_s| )

with (alpha_s, h_s) the support coefficients of the energy frame.  Magic
states are reachable from a stabiliser input exactly when M > 1.  For
energy-diagonal inputs M collapses to a closed form with an explicit
critical inverse temperature, a depolarising robustness t* = (M-1)/M and a
reparameterisation L that is linear in the temperature surplus.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import DEGENERATE_GAP, INTERVAL_TOL, INVPHI
from .geometry import rotation_to_z, sign_vectors, support_coefficients
from .thermal import (
    EnergyFrameState,
    HamiltonianDirection,
    ThermalContext,
    coherence_cap,
)

BRANCH_COHERENT = "coherent-general"
BRANCH_LOW_P = "incoherent-low-p"
BRANCH_HIGH_P = "incoherent-high-p"


@dataclass(frozen=True)
class WitnessReport:
    """Witness value with its maximising population and sign vector.

    ``value`` is reproducible from (q_star, sign_vector) by evaluating the
    support objective directly.  ``input_stabiliser`` is False when the input
    state already violates the octahedron inequality, in which case the
    magic-generation reading of the value does not apply.
    """

    value: float
    q_star: float
    sign_vector: tuple[int, int, int]
    branch: str
    input_stabiliser: bool

    @property
    def magic(self) -> bool:
        return self.value > 1.0

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "q_star": self.q_star,
            "sign_vector": list(self.sign_vector),
            "branch": self.branch,
            "magic": self.magic,
            "input_stabiliser": self.input_stabiliser,
        }


def max_weighted_support(
    p: float,
    c: float,
    ctx: ThermalContext,
    w_perp: np.ndarray,
    w_axial: np.ndarray,
    n_grid: int = 512,
    refine_iters: int = 45,
):
    """Maximise c_max(q) * w_perp[k] + |2q - 1| * w_axial[k] over reachable q.

    The workhorse behind the witness and the fidelity optimiser.  Each
    objective is concave on either side of the kink at q = 1/2 (the cap is
    the square root of a quadratic with real roots), hence unimodal per
    side: a grid pass over the interval plus the endpoints and the kink
    localises each side's maximum to one bracket, and golden-section
    refinement finishes the job.  Brackets that provably cannot beat the
    incumbent (the cap's bracket maximum has a closed form) are skipped.
    Returns (value, q_at, k_index).
    """
    w_perp = np.atleast_1d(np.asarray(w_perp, dtype=float))
    w_axial = np.atleast_1d(np.asarray(w_axial, dtype=float))
    n_k = len(w_perp)
    gamma = ctx.gamma
    q_star = 1.0 - ctx.boltzmann * p
    lo, hi = (p, q_star) if p <= q_star else (q_star, p)

    if hi - lo <= 2.0 * DEGENERATE_GAP:
        # interval is (near-)degenerate: only q = p is available, cap(p) = |c|
        vals = abs(c) * w_perp + abs(2.0 * p - 1.0) * w_axial
        k = int(np.argmax(vals))
        return float(vals[k]), p, k

    # inlined coherence cap for q inside the interval: the radicand is an
    # upward quadratic whose roots flank the interval on one side, so the
    # cap is monotone (and concave) across the interval
    one_m_g = 1.0 - gamma
    ga = gamma * (1.0 - p)
    gb2 = p * one_m_g - gamma
    capscale = abs(c) / abs(p - gamma)

    def cap_arr(q):
        rad = (q * one_m_g - ga) * (gb2 + gamma * q)
        return capscale * np.sqrt(np.maximum(rad, 0.0))

    qs = np.linspace(lo, hi, n_grid)
    kink_interior = lo < 0.5 < hi
    if kink_interior:
        qs = np.sort(np.append(qs, 0.5))
    caps = cap_arr(qs)
    absz = np.abs(2.0 * qs - 1.0)
    grid_vals = caps[:, None] * w_perp[None, :] + absz[:, None] * w_axial[None, :]

    # per-side segments of the kink (both unimodal); each contributes one
    # candidate bracket per weight index
    if kink_interior:
        mid = int(np.searchsorted(qs, 0.5))
        ranges = [(0, mid), (mid, len(qs) - 1)]
    else:
        ranges = [(0, len(qs) - 1)]

    best_val = -np.inf
    best_q = p
    best_k = 0
    brackets = []  # (a, b, k, upper_bound)
    for s0, s1 in ranges:
        seg = grid_vals[s0 : s1 + 1]
        idx = seg.argmax(axis=0) + s0
        vals_k = grid_vals[idx, np.arange(n_k)]
        j = int(np.argmax(vals_k))
        if vals_k[j] > best_val:
            best_val = float(vals_k[j])
            best_q = float(qs[idx[j]])
            best_k = j
        il = np.maximum(idx - 1, s0)
        ih = np.minimum(idx + 1, s1)
        a_k = qs[il]
        b_k = qs[ih]
        # cap is monotone and |2q-1| convex: both peak at bracket endpoints
        cap_ub = np.maximum(cap_arr(a_k), cap_arr(b_k))
        z_ub = np.maximum(np.abs(2.0 * a_k - 1.0), np.abs(2.0 * b_k - 1.0))
        ub = cap_ub * w_perp + z_ub * w_axial
        for k in range(n_k):
            if b_k[k] > a_k[k]:
                brackets.append((float(a_k[k]), float(b_k[k]), k, float(ub[k])))

    invphi = INVPHI
    c1 = 1.0 - invphi
    for a, b, k, ub in brackets:
        if ub <= best_val:
            continue
        wpk = w_perp[k] * capscale
        wak = w_axial[k]
        h = b - a
        x1 = a + c1 * h
        x2 = a + invphi * h

        def f(x):
            rad = (x * one_m_g - ga) * (gb2 + gamma * x)
            root = math.sqrt(rad) if rad > 0.0 else 0.0
            return root * wpk + abs(2.0 * x - 1.0) * wak

        f1 = f(x1)
        f2 = f(x2)
        for _ in range(refine_iters):
            if f1 >= f2:
                b = x2
                x2 = x1
                f2 = f1
                h = b - a
                x1 = a + c1 * h
                f1 = f(x1)
            else:
                a = x1
                x1 = x2
                f1 = f2
                h = b - a
                x2 = a + invphi * h
                f2 = f(x2)
        xm = 0.5 * (a + b)
        fm = f(xm)
        if fm > best_val:
            best_val = fm
            best_q = xm
            best_k = k
    return float(best_val), float(best_q), int(best_k)


def octant_weights(n: np.ndarray):
    """(alpha_s, h_s) for the eight octants, directly from the direction.

    h_s = s . n since the third rotated column is n itself, and orthogonality
    of the frame gives alpha_s = sqrt(3 - h_s^2); equal to the coefficients
    computed from an explicit rotation.
    """
    signs = sign_vectors()
    h = signs @ np.asarray(n, dtype=float)
    alpha = np.sqrt(np.maximum(3.0 - h * h, 0.0))
    return signs, alpha, h


def witness(
    state: EnergyFrameState, H: HamiltonianDirection, ctx: ThermalContext
) -> WitnessReport:
    """Largest l1 norm over the reachable set; magic is generated iff > 1.

    Runs the general two-level maximisation (population sweep times octant
    sign vectors).  A warning is issued when the input state itself is
    outside the octahedron, since the generation reading presumes a
    stabiliser input; the value is still well defined.
    """
    signs, alpha, h = octant_weights(H.n)
    value, q_at, k = max_weighted_support(
        state.p, state.c, ctx, alpha, np.abs(h)
    )
    sign = tuple(int(s) for s in signs[k])
    input_ok = _input_is_stabiliser(state, alpha, h)
    if not input_ok:
        warnings.warn(
            "input state is already outside the stabiliser octahedron; "
            "the witness no longer certifies generation",
            stacklevel=2,
        )
    return WitnessReport(
        value=value,
        q_star=q_at,
        sign_vector=sign,
        branch=_branch(state, ctx),
        input_stabiliser=input_ok,
    )


def _branch(state: EnergyFrameState, ctx: ThermalContext) -> str:
    if state.c > 0.0:
        return BRANCH_COHERENT
    return BRANCH_LOW_P if state.p < ctx.gamma else BRANCH_HIGH_P


def _input_is_stabiliser(state: EnergyFrameState, alpha, h) -> bool:
    z = 2.0 * state.p - 1.0
    if state.phase is None:
        # worst case over the unspecified phase: the circle support at q = p
        worst = np.max(state.c * alpha + abs(z) * np.abs(h))
        return bool(worst <= 1.0 + INTERVAL_TOL)
    # specific point on the circle
    sc = np.array([state.c * np.cos(state.phase), state.c * np.sin(state.phase), z])
    return bool(np.abs(sc).sum() <= 1.0 + INTERVAL_TOL)


def evaluate_support(
    q: float,
    sign_vector,
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
) -> float:
    """Support objective at a given (q, s); reproduces WitnessReport.value."""
    coeffs = support_coefficients(rotation_to_z(H.n))
    s = np.asarray(sign_vector, dtype=float)
    idx = int(np.argmax(np.all(coeffs.signs == s, axis=1)))
    cap = coherence_cap(q, state.p, state.c, ctx)
    return float(cap * coeffs.alpha[idx] + abs(2.0 * q - 1.0) * abs(coeffs.h[idx]))


def witness_argmax_point(
    report: WitnessReport,
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
) -> np.ndarray:
    """Lab-frame Bloch point attaining the witness value.

    Reconstructs the boundary point from (q_star, sign_vector): the ring at
    q_star with the azimuth aligned to the winning octant.  Its l1 norm
    equals the witness value.
    """
    R = rotation_to_z(H.n)
    m = R.T
    s = np.asarray(report.sign_vector, dtype=float)
    z = 2.0 * report.q_star - 1.0
    if z * float(s @ m[:, 2]) < 0.0:
        s = -s  # the octant pair (s, -s) shares alpha; pick the aligned one
    cap = coherence_cap(report.q_star, state.p, state.c, ctx)
    sx = float(s @ m[:, 0])
    sy = float(s @ m[:, 1])
    phi = np.arctan2(sy, sx) if (sx != 0.0 or sy != 0.0) else 0.0
    local = np.array([cap * np.cos(phi), cap * np.sin(phi), z])
    return m @ local


def witness_incoherent(
    p: float, H: HamiltonianDirection, ctx: ThermalContext
) -> float:
    """Closed form of the witness for energy-diagonal inputs.

    ||n||_1 * |1 - 2 p exp(-beta*gap)| below the Gibbs weight and
    ||n||_1 * |2p - 1| above it; the two branches agree at p = gamma.
    """
    l1 = float(np.abs(H.n).sum())
    if p < ctx.gamma:
        return l1 * abs(1.0 - 2.0 * p * np.exp(-ctx.beta * H.gap))
    return l1 * abs(2.0 * p - 1.0)


def critical_beta(
    state: EnergyFrameState,
    H: HamiltonianDirection,
    beta_max: float = 10.0,
    n_scan: int = 2000,
    tol: float = 1e-8,
) -> float | None:
    """Smallest inverse temperature in [0, beta_max] with witness > 1.

    Dense scan followed by bisection refinement; returns None when the
    witness never crosses 1 up to beta_max.  First-crossing semantics: the
    scan locates the earliest sign change of M - 1.
    """
    if beta_max <= 0.0:
        raise ValueError("beta_max must be positive")
    _, alpha, h = octant_weights(H.n)
    habs = np.abs(h)

    def value(beta: float) -> float:
        ctx = ThermalContext.create(beta, H.gap)
        v, _, _ = max_weighted_support(state.p, state.c, ctx, alpha, habs)
        return v

    betas = np.linspace(0.0, beta_max, n_scan)
    prev = betas[0]
    if value(prev) > 1.0:
        return 0.0
    for beta in betas[1:]:
        if value(beta) > 1.0:
            a, b = prev, beta
            while b - a > tol:
                mid = 0.5 * (a + b)
                if value(mid) > 1.0:
                    b = mid
                else:
                    a = mid
            return 0.5 * (a + b)
        prev = beta
    return None


def critical_coherence(
    p: float,
    H: HamiltonianDirection,
    ctx: ThermalContext,
    tol: float = 1e-12,
) -> float | None:
    """Smallest coherence magnitude whose stabiliser input generates magic.

    The witness is nondecreasing and continuous in c (the cap scales with
    |c|), so bisection applies.  The search runs over coherences that keep
    the input inside the octahedron at its worst phase; past that bound the
    input is nonstabiliser on its own and nothing is generated.  Returns 0.0
    when the incoherent witness already exceeds 1 and None when no
    admissible coherence reaches the threshold (in particular for
    Pauli-aligned directions, where the reachable set never outgrows the
    input ring).
    """
    _, alpha, h = octant_weights(H.n)
    habs = np.abs(h)

    def value(c: float) -> float:
        v, _, _ = max_weighted_support(p, c, ctx, alpha, habs)
        return v

    if value(0.0) > 1.0:
        return 0.0
    # largest c with the worst-phase input ring still inside the octahedron
    z0 = abs(2.0 * p - 1.0)
    pos = alpha > 1e-12
    c_stab = float(np.min((1.0 - z0 * habs[pos]) / alpha[pos]))
    c_hi = min(float(np.sqrt(max(p * (1.0 - p), 0.0))), max(c_stab, 0.0))
    if c_hi <= 0.0 or value(c_hi) <= 1.0:
        return None
    a, b = 0.0, c_hi
    while b - a > tol:
        mid = 0.5 * (a + b)
        if value(mid) > 1.0:
            b = mid
        else:
            a = mid
    return 0.5 * (a + b)


def robustness(M: float) -> float:
    """Minimal depolarising strength removing all generated magic: (M-1)/M.

    Zero at or below the threshold M = 1; white noise of strength t shrinks
    Bloch vectors by (1 - t), so t* rescales the worst violation back onto
    the octahedron facet.
    """
    if M < 0.0:
        raise ValueError("witness value must be nonnegative")
    if M <= 1.0:
        return 0.0
    return (M - 1.0) / M


def thermometer(
    p: float, H: HamiltonianDirection, ctx: ThermalContext
) -> float:
    """Normalised log transform of the incoherent witness.

    L = -log(1 - M/||n||_1) + log(1 - 1/||n||_1).  In the low-population
    branch this equals gap * (beta - beta_crt): a linear thermometer for the
    cooling surplus past the critical point.  Requires ||n||_1 > 1; along a
    Pauli axis there is no temperature leverage.
    """
    l1 = float(np.abs(H.n).sum())
    if l1 <= 1.0 + 1e-12:
        raise ValueError("Hamiltonian direction has unit l1 norm; L is undefined")
    M = witness_incoherent(p, H, ctx)
    return float(-np.log(1.0 - M / l1) + np.log(1.0 - 1.0 / l1))


def critical_beta_closed_form(
    p: float, H: HamiltonianDirection
) -> float | None:
    """Analytic crossing of the incoherent witness in the low-p branch.

    (1/gap) * log(2 p ||n||_1 / (||n||_1 - 1)), valid when ||n||_1 > 1 and
    the argument exceeds 1 (otherwise the witness is already above 1 at
    beta = 0, or never crosses).
    """
    l1 = float(np.abs(H.n).sum())
    if l1 <= 1.0:
        return None
    arg = 2.0 * p * l1 / (l1 - 1.0)
    if arg <= 0.0:
        return None
    beta = np.log(arg) / H.gap
    return float(max(beta, 0.0))
