import numpy as np
import pytest

from thermomagic.geometry import (
    circle_l1_support,
    rotation_to_z,
    support_coefficients,
    unit_vector,
)
from thermomagic.oracle import azimuth_scan, cone_sample_witness, facet_distance_scan
from thermomagic.thermal import EnergyFrameState, HamiltonianDirection, ThermalContext
from thermomagic.witness import witness

from conftest import random_direction


class TestAzimuthScan:
    def test_identity_frame(self):
        # in the identity frame the max l1 over the circle is r*sqrt(2) + |z|
        val = azimuth_scan(np.eye(3), 0.5, 0.25, n_phi=4096)
        assert np.isclose(val, 0.5 * np.sqrt(2.0) + 0.25, atol=1e-9)

    def test_diagonal_frame(self):
        R = rotation_to_z(unit_vector(1.0, 1.0, 1.0))
        val = azimuth_scan(R, 0.0, 1.0, n_phi=4096)
        assert np.isclose(val, np.sqrt(3.0), atol=1e-9)

    def test_agrees_with_closed_form(self, rng):
        for _ in range(50):
            R = rotation_to_z(random_direction(rng))
            co = support_coefficients(R)
            r_perp = rng.uniform(0.0, 1.2)
            z = rng.uniform(-1.2, 1.2)
            assert abs(
                azimuth_scan(R, r_perp, z) - circle_l1_support(co, r_perp, z)
            ) <= 1e-9

    def test_scan_below_closed_form(self, rng):
        # unrefined scan never exceeds the support value
        for _ in range(20):
            R = rotation_to_z(random_direction(rng))
            co = support_coefficients(R)
            r_perp, z = rng.uniform(0, 1), rng.uniform(-1, 1)
            raw = azimuth_scan(R, r_perp, z, n_phi=512, refine=False)
            assert raw <= circle_l1_support(co, r_perp, z) + 1e-12

    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError):
            azimuth_scan(np.eye(3), -1.0, 0.0)


class TestConeSampleWitness:
    def test_matches_witness_decision_and_value(self, rng):
        for _ in range(25):
            n = random_direction(rng)
            H = HamiltonianDirection(n=n)
            p = rng.uniform(0.05, 0.95)
            c = rng.uniform(0.0, np.sqrt(p * (1 - p)))
            state = EnergyFrameState(p=p, c=c)
            ctx = ThermalContext.create(rng.uniform(0.0, 3.0), 2.0)
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rep = witness(state, H, ctx)
            exceeded, sampled = cone_sample_witness(state, H, ctx)
            assert sampled <= rep.value + 1e-9
            assert rep.value - sampled <= 5e-3
            if abs(rep.value - 1.0) > 1e-4:
                assert exceeded == rep.magic

    def test_axis_case_exact(self):
        # incoherent Pauli-aligned case: max l1 equals the endpoint value
        H = HamiltonianDirection(n=np.array([0.0, 0.0, 1.0]))
        state = EnergyFrameState(p=0.2)
        ctx = ThermalContext.create(1.0, 2.0)
        exceeded, sampled = cone_sample_witness(state, H, ctx)
        assert not exceeded
        assert sampled <= 1.0

    def test_grid_floor_enforced(self):
        H = HamiltonianDirection(n=np.array([0.0, 0.0, 1.0]))
        state = EnergyFrameState(p=0.2)
        ctx = ThermalContext.create(1.0, 2.0)
        with pytest.raises(ValueError):
            cone_sample_witness(state, H, ctx, n_q=8, n_phi=8)


class TestFacetScan:
    def test_interior_zero(self):
        assert facet_distance_scan(np.array([0.1, 0.2, 0.0])) == 0.0

    def test_vertex_distance(self):
        d = facet_distance_scan(np.array([2.0, 0.0, 0.0]), n_grid=300)
        assert abs(d - 1.0) <= 1e-4

    def test_diagonal_distance(self):
        v = unit_vector(1.0, 1.0, 1.0)
        d = facet_distance_scan(v, n_grid=600)
        assert abs(d - (1.0 - 1.0 / np.sqrt(3.0))) <= 1e-3
