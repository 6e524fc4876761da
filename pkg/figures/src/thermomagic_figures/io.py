"""Readers for the primary CLI's CSV outputs.

No physics here: files are parsed as-is, empty cells become NaN sentinels
and grids are reshaped purely from the recorded coordinates.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np


def _read_rows(path: str, expected_header: list[str]) -> list[list[str]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{path}: empty file")
    if rows[0] != expected_header:
        raise ValueError(
            f"{path}: expected header {','.join(expected_header)!r}, "
            f"found {','.join(rows[0])!r}"
        )
    return rows[1:]


def _cell(value: str) -> float:
    return np.nan if value == "" else float(value)


@dataclass(frozen=True)
class Curve:
    """A 1-D sweep: x values plus y values with NaN for unattainable cells."""

    x: np.ndarray
    y: np.ndarray
    label: str


def read_curve(path: str, header: tuple[str, str], label: str | None = None) -> Curve:
    rows = _read_rows(path, list(header))
    x = np.array([_cell(r[0]) for r in rows])
    y = np.array([_cell(r[1]) for r in rows])
    return Curve(x=x, y=y, label=label or path)


@dataclass(frozen=True)
class LandscapeData:
    lon: np.ndarray
    lat: np.ndarray
    values: np.ndarray  # (n_lat, n_lon), NaN sentinels


def read_landscape(path: str) -> LandscapeData:
    rows = _read_rows(path, ["lon", "lat", "beta_dist"])
    lon = np.array([float(r[0]) for r in rows])
    lat = np.array([float(r[1]) for r in rows])
    vals = np.array([_cell(r[2]) for r in rows])
    lons = np.unique(lon)
    lats = np.unique(lat)
    if len(lons) * len(lats) != len(rows):
        raise ValueError(f"{path}: not a complete rectangular grid")
    # rows are latitude-outer; rebuild the grid in recorded order
    values = vals.reshape(len(lats), len(lons))
    lat_order = lat.reshape(len(lats), len(lons))[:, 0]
    lon_order = lon.reshape(len(lats), len(lons))[0]
    return LandscapeData(lon=lon_order, lat=lat_order, values=values)


@dataclass(frozen=True)
class MeshData:
    q: np.ndarray
    phi: np.ndarray
    points: np.ndarray  # (n_q, n_phi, 3)


def read_mesh(path: str) -> MeshData:
    rows = _read_rows(path, ["q", "phi", "x", "y", "z"])
    data = np.array([[float(tok) for tok in r] for r in rows])
    qs = np.unique(data[:, 0])
    n_phi = len(data) // len(qs)
    if len(qs) * n_phi != len(data):
        raise ValueError(f"{path}: not a complete q-major grid")
    # q-major ordering: phi cycles fastest
    q = data[::n_phi, 0]
    phi = data[:n_phi, 1]
    points = data[:, 2:].reshape(len(q), n_phi, 3)
    return MeshData(q=q, phi=phi, points=points)
