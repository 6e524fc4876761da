"""Thermally reachable fidelities with magic-state orbits and their landscapes.

The best fidelity with a pure direction u decomposes along the energy axis:
F*(beta, u) = (1 + max_q [c_max(q) u_perp + |2q - 1| u_z]) / 2 with
u_z = |n . u|, reusing the kink-safe population maximiser of the witness
module.  Maximising over a Clifford orbit and root-finding in beta gives the
distillability inverse temperature; sweeping the Hamiltonian direction over
an equirectangular grid gives the orientation landscape.
"""

from __future__ import annotations

import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .stabiliser import DistillThresholds, orbit_directions
from .thermal import EnergyFrameState, HamiltonianDirection, ThermalContext
from .witness import max_weighted_support

ENV_THREADS = "THERMOMAGIC_THREADS"


def best_fidelity(
    beta: float,
    u: np.ndarray,
    state: EnergyFrameState,
    H: HamiltonianDirection,
) -> float:
    """Maximal reachable fidelity with the pure state along direction u."""
    u = np.asarray(u, dtype=float)
    ctx = ThermalContext.create(beta, H.gap)
    uz = abs(float(H.n @ u))
    uperp = float(np.sqrt(max(1.0 - uz * uz, 0.0)))
    val, _, _ = max_weighted_support(state.p, state.c, ctx, [uperp], [uz])
    return 0.5 * (1.0 + val)


def _orbit_weights(orbit: str, n: np.ndarray):
    uz = np.abs(orbit_directions(orbit) @ n)
    uperp = np.sqrt(np.clip(1.0 - uz * uz, 0.0, None))
    return uperp, uz


def orbit_fidelity(
    beta: float,
    orbit: str,
    state: EnergyFrameState,
    H: HamiltonianDirection,
) -> float:
    """Best reachable fidelity across the Clifford orbit ('T' or 'H')."""
    ctx = ThermalContext.create(beta, H.gap)
    uperp, uz = _orbit_weights(orbit, H.n)
    val, _, _ = max_weighted_support(state.p, state.c, ctx, uperp, uz)
    return 0.5 * (1.0 + val)


def beta_dist(
    orbit: str,
    state: EnergyFrameState,
    H: HamiltonianDirection,
    beta_max: float = 10.0,
    thresholds: DistillThresholds = DistillThresholds(),
    tol: float = 1e-6,
) -> float | None:
    """Smallest inverse temperature whose orbit fidelity reaches the threshold.

    The orbit fidelity is nondecreasing in beta (the reachable set only
    grows past the Gibbs crossing and its q = p slice never shrinks), so a
    plain bisection applies.  Returns None when the threshold is out of
    reach even at beta_max.
    """
    if beta_max <= 0.0:
        raise ValueError("beta_max must be positive")
    thr = thresholds.for_orbit(orbit)
    if orbit_fidelity(0.0, orbit, state, H) >= thr:
        return 0.0
    if orbit_fidelity(beta_max, orbit, state, H) < thr:
        return None
    a, b = 0.0, beta_max
    while b - a > tol:
        mid = 0.5 * (a + b)
        if orbit_fidelity(mid, orbit, state, H) >= thr:
            b = mid
        else:
            a = mid
    return 0.5 * (a + b)


@dataclass(frozen=True)
class LandscapeGrid:
    """beta_dist over Hamiltonian orientations on a (lat, lon) grid.

    ``values[i, j]`` corresponds to latitude lat[i] and longitude lon[j];
    unattainable cells hold NaN (serialised as null in JSON and an empty
    field in CSV).  Angles are radians.
    """

    lon: np.ndarray
    lat: np.ndarray
    values: np.ndarray
    orbit: str
    p: float
    c: float
    gap: float
    beta_max: float
    threshold: float

    def to_csv(self, path=None, degrees: bool = False) -> str | None:
        """Rows lon,lat,beta_dist in row-major (latitude-outer) order."""
        buf = io.StringIO()
        buf.write("lon,lat,beta_dist\n")
        fmt = "%.17g"
        scale = 180.0 / np.pi if degrees else 1.0
        for i, la in enumerate(self.lat):
            for j, lo in enumerate(self.lon):
                v = self.values[i, j]
                cell = "" if np.isnan(v) else fmt % v
                buf.write(f"{fmt % (lo * scale)},{fmt % (la * scale)},{cell}\n")
        text = buf.getvalue()
        if path is None:
            return text
        with open(path, "w", newline="") as fh:
            fh.write(text)
        return None

    def to_json_dict(self) -> dict:
        vals = [
            [None if np.isnan(v) else float(v) for v in row]
            for row in self.values
        ]
        return {
            "orbit": self.orbit,
            "p": self.p,
            "c": self.c,
            "gap": self.gap,
            "beta_max": self.beta_max,
            "threshold": self.threshold,
            "units": "radians",
            "lon": [float(x) for x in self.lon],
            "lat": [float(x) for x in self.lat],
            "values": vals,
        }

    def to_json(self, path=None) -> str | None:
        text = json.dumps(self.to_json_dict(), indent=2) + "\n"
        if path is None:
            return text
        with open(path, "w", newline="") as fh:
            fh.write(text)
        return None


def direction_from_angles(lon: float, lat: float) -> np.ndarray:
    return np.array(
        [np.cos(lat) * np.cos(lon), np.cos(lat) * np.sin(lon), np.sin(lat)]
    )


def _landscape_row(args) -> np.ndarray:
    orbit, p, c, gap, beta_max, thr_t, thr_h, lat, lons = args
    state = EnergyFrameState(p=p, c=c)
    thresholds = DistillThresholds(f_thr_t=thr_t, f_thr_h=thr_h)
    row = np.full(len(lons), np.nan)
    for j, lon in enumerate(lons):
        H = HamiltonianDirection(n=direction_from_angles(lon, lat), gap=gap)
        bd = beta_dist(orbit, state, H, beta_max=beta_max, thresholds=thresholds)
        if bd is not None:
            row[j] = bd
    return row


def _worker_count() -> int:
    raw = os.environ.get(ENV_THREADS, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def landscape(
    orbit: str,
    state: EnergyFrameState,
    n_lon: int = 181,
    n_lat: int = 91,
    gap: float = 2.0,
    beta_max: float = 10.0,
    thresholds: DistillThresholds = DistillThresholds(),
) -> LandscapeGrid:
    """beta_dist over an equirectangular grid of Hamiltonian orientations.

    Longitudes cover [-pi, pi) half-open, latitudes [-pi/2, pi/2] closed.
    Cells are computed in deterministic row-major order; THERMOMAGIC_THREADS
    (default 1) caps the number of worker processes, and the assembled grid
    is identical for any worker count.
    """
    if n_lon < 2 or n_lat < 2:
        raise ValueError("need n_lon >= 2 and n_lat >= 2")
    lons = np.linspace(-np.pi, np.pi, n_lon, endpoint=False)
    lats = np.linspace(-np.pi / 2.0, np.pi / 2.0, n_lat)
    jobs = [
        (
            orbit,
            state.p,
            state.c,
            gap,
            beta_max,
            thresholds.f_thr_t,
            thresholds.f_thr_h,
            lat,
            lons,
        )
        for lat in lats
    ]
    workers = _worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_landscape_row, jobs))
    else:
        rows = [_landscape_row(job) for job in jobs]
    values = np.vstack(rows)
    return LandscapeGrid(
        lon=lons,
        lat=lats,
        values=values,
        orbit=orbit,
        p=state.p,
        c=state.c,
        gap=gap,
        beta_max=beta_max,
        threshold=thresholds.for_orbit(orbit),
    )


def count_minimum_basins(values: np.ndarray) -> int:
    """Number of regional minima of a (lat, lon) value grid.

    A regional minimum is an 8-connected plateau of equal finite values whose
    entire outer boundary is strictly greater (NaN counts as +inf).
    Longitude wraps around; latitude is clamped.
    """
    v = np.where(np.isnan(values), np.inf, values)
    n_lat, n_lon = v.shape
    seen = np.zeros(v.shape, dtype=bool)
    basins = 0
    for i in range(n_lat):
        for j in range(n_lon):
            if seen[i, j] or not np.isfinite(v[i, j]):
                continue
            level = v[i, j]
            seen[i, j] = True
            is_minimum = True
            stack = [(i, j)]
            while stack:
                ci, cj = stack.pop()
                for di in (-1, 0, 1):
                    for dj in (-1, 0, 1):
                        if di == 0 and dj == 0:
                            continue
                        ni = ci + di
                        nj = (cj + dj) % n_lon
                        if not 0 <= ni < n_lat:
                            continue
                        other = v[ni, nj]
                        if other == level:
                            if not seen[ni, nj]:
                                seen[ni, nj] = True
                                stack.append((ni, nj))
                        elif other < level:
                            is_minimum = False
            if is_minimum:
                basins += 1
    return basins
