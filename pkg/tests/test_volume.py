import numpy as np
import pytest

from thermomagic.geometry import unit_vector
from thermomagic.thermal import EnergyFrameState, HamiltonianDirection, ThermalContext
from thermomagic.volume import ball_samples, cone_volume, magic_volume
from thermomagic.witness import witness


def ctx_at(beta):
    return ThermalContext.create(beta, 2.0)


FIG4_H = HamiltonianDirection(n=unit_vector(1.0, 1.0, 0.0))
FIG4_STATE = EnergyFrameState(p=0.5, c=0.25)


class TestSampler:
    def test_inside_ball(self, rng):
        pts = ball_samples(20_000, rng)
        assert np.all(np.linalg.norm(pts, axis=1) <= 1.0 + 1e-12)

    def test_mean_radius(self, rng):
        # uniform ball: E[r] = 3/4
        pts = ball_samples(200_000, rng)
        assert abs(np.linalg.norm(pts, axis=1).mean() - 0.75) < 3e-3


class TestEstimates:
    def test_bit_exact_reproducibility(self):
        a = magic_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=50_000, seed=7)
        b = magic_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=50_000, seed=7)
        assert a.fraction == b.fraction
        assert a.to_json() == b.to_json()

    def test_seed_changes_stream(self):
        a = cone_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=50_000, seed=1)
        b = cone_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=50_000, seed=2)
        assert a.fraction != b.fraction

    def test_magic_at_most_reachable(self):
        for seed in (0, 1, 2):
            cv = cone_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=40_000, seed=seed)
            mv = magic_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=40_000, seed=seed)
            assert mv.fraction <= cv.fraction

    def test_degenerate_cone_measure_zero(self):
        ctx = ctx_at(1.0)
        state = EnergyFrameState(p=ctx.gamma, c=0.0)
        est = cone_volume(state, FIG4_H, ctx, n_samples=100_000, seed=3)
        assert est.fraction == 0.0

    def test_axis_segment_measure_zero(self):
        est = cone_volume(
            EnergyFrameState(p=0.0), FIG4_H, ctx_at(0.0), n_samples=100_000, seed=4
        )
        assert est.fraction == 0.0

    def test_magic_zero_when_witness_below_one(self):
        state = EnergyFrameState(p=0.45, c=0.05)
        H = HamiltonianDirection(n=unit_vector(1.0, 1.0, 1.0))
        ctx = ctx_at(0.3)
        assert witness(state, H, ctx).value < 1.0 - 1e-6
        est = magic_volume(state, H, ctx, n_samples=200_000, seed=5)
        assert est.fraction == 0.0

    def test_std_error_formula(self):
        est = magic_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=50_000, seed=6)
        f = est.fraction
        assert np.isclose(est.std_error, np.sqrt(f * (1 - f) / 50_000), atol=1e-15)
        assert np.isclose(est.absolute, f * 4 * np.pi / 3, atol=1e-15)

    def test_sample_floor_enforced(self):
        with pytest.raises(ValueError):
            cone_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=10, seed=0)

    def test_two_regime_dip_and_recovery(self):
        # starting above the Gibbs weight: the reachable set shrinks while
        # gamma < p and grows again past the crossing gamma = p
        state = EnergyFrameState(p=0.7, c=0.35)
        H = HamiltonianDirection(n=unit_vector(1.0, 1.0, 1.0))
        beta_cross = 0.5 * np.log(0.7 / 0.3)
        low = magic_volume(state, H, ctx_at(beta_cross - 0.02), n_samples=300_000, seed=8)
        high = magic_volume(state, H, ctx_at(3.0), n_samples=300_000, seed=8)
        sigma = np.sqrt(low.std_error**2 + high.std_error**2)
        assert low.fraction <= high.fraction + 3 * sigma

    def test_json_fields(self):
        est = magic_volume(FIG4_STATE, FIG4_H, ctx_at(2.0), n_samples=50_000, seed=9)
        blob = est.to_json_dict()
        assert blob["normalisation"] == "bloch-ball"
        assert blob["kind"] == "nonstabiliser"
        assert blob["n_samples"] == 50_000
        assert blob["seed"] == 9
