"""Monte-Carlo volume of the reachable set and of its nonstabiliser part.

Plain hit-or-miss sampling of the unit Bloch ball; the reported fraction is
normalised by the ball volume 4*pi/3.  The sampler is fully determined by
the seed (same seed, same sample stream, bit-identical estimate).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .thermal import EnergyFrameState, HamiltonianDirection, ThermalContext, cone_contains

BALL_VOLUME = 4.0 * np.pi / 3.0


@dataclass(frozen=True)
class VolumeEstimate:
    """Hit-or-miss estimate of a subvolume of the Bloch ball.

    ``fraction`` is relative to the ball, ``absolute`` is fraction * 4*pi/3
    and ``std_error`` the binomial standard error sqrt(f(1-f)/n).
    """

    fraction: float
    absolute: float
    std_error: float
    n_samples: int
    seed: int
    kind: str

    def to_json_dict(self) -> dict:
        return {
            "fraction": self.fraction,
            "absolute": self.absolute,
            "std_error": self.std_error,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "kind": self.kind,
            "normalisation": "bloch-ball",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def ball_samples(n: int, rng: np.random.Generator) -> np.ndarray:
    """n points uniform in the unit ball via the direct radial method.

    A Gaussian direction with a cube-root radial law; the draw count per
    sample is fixed, which keeps the stream reproducible.
    """
    x = rng.standard_normal((n, 3))
    norms = np.linalg.norm(x, axis=1)
    norms[norms == 0.0] = 1.0
    radii = rng.random(n) ** (1.0 / 3.0)
    return x / norms[:, None] * radii[:, None]


def _estimate(hits: np.ndarray, n: int, seed: int, kind: str) -> VolumeEstimate:
    frac = float(np.count_nonzero(hits)) / n
    return VolumeEstimate(
        fraction=frac,
        absolute=frac * BALL_VOLUME,
        std_error=float(np.sqrt(frac * (1.0 - frac) / n)),
        n_samples=n,
        seed=seed,
        kind=kind,
    )


def cone_volume(
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
    n_samples: int = 1_000_000,
    seed: int = 0,
) -> VolumeEstimate:
    """Fraction of the Bloch ball reachable under thermal operations."""
    if n_samples < 1000:
        raise ValueError("need at least 1000 samples")
    rng = np.random.default_rng(seed)
    pts = ball_samples(n_samples, rng)
    hits = cone_contains(pts, state, H, ctx)
    return _estimate(hits, n_samples, seed, "reachable")


def magic_volume(
    state: EnergyFrameState,
    H: HamiltonianDirection,
    ctx: ThermalContext,
    n_samples: int = 1_000_000,
    seed: int = 0,
) -> VolumeEstimate:
    """Fraction of the ball that is reachable and outside the octahedron.

    Zero exactly whenever the witness is at most 1, since then the whole
    reachable set sits inside the stabiliser polytope.
    """
    if n_samples < 1000:
        raise ValueError("need at least 1000 samples")
    rng = np.random.default_rng(seed)
    pts = ball_samples(n_samples, rng)
    hits = cone_contains(pts, state, H, ctx) & (np.abs(pts).sum(axis=1) > 1.0)
    return _estimate(hits, n_samples, seed, "nonstabiliser")
