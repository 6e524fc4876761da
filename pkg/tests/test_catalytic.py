import numpy as np
import pytest

from thermomagic.catalytic import (
    catalytic_critical_beta,
    catalytic_reachable,
    free_energy,
)
from thermomagic.geometry import unit_vector
from thermomagic.thermal import (
    EnergyFrameState,
    HamiltonianDirection,
    ThermalContext,
    reachable_interval,
)
from thermomagic.witness import critical_beta

from conftest import random_direction

T_DIR = unit_vector(1.0, 1.0, 1.0)
SQRT3 = np.sqrt(3.0)


class TestFreeEnergy:
    def test_maximally_mixed(self):
        H = HamiltonianDirection(n=T_DIR)
        fe = free_energy(EnergyFrameState(p=0.5), H, beta=2.0)
        assert np.isclose(fe.energy, 0.0, atol=1e-15)
        assert np.isclose(fe.entropy, np.log(2.0), atol=1e-12)
        assert np.isclose(fe.value, -np.log(2.0) / 2.0, atol=1e-12)

    def test_pure_ground(self):
        H = HamiltonianDirection(n=T_DIR)
        fe = free_energy(EnergyFrameState(p=1.0), H, beta=1.5)
        assert np.isclose(fe.energy, -1.0, atol=1e-15)
        assert fe.entropy == 0.0
        assert np.isclose(fe.value, -1.0, atol=1e-15)

    def test_thermal_state_minimises_diagonal(self):
        H = HamiltonianDirection(n=T_DIR)
        beta = 1.2
        ctx = ThermalContext.create(beta, H.gap)
        f_thermal = free_energy(EnergyFrameState(p=ctx.gamma), H, beta).value
        for p in np.linspace(0.0, 1.0, 201):
            assert f_thermal <= free_energy(EnergyFrameState(p=p), H, beta).value + 1e-12

    def test_coherence_lowers_entropy(self):
        H = HamiltonianDirection(n=T_DIR)
        diag = free_energy(EnergyFrameState(p=0.5), H, 1.0)
        coh = free_energy(EnergyFrameState(p=0.5, c=0.3), H, 1.0)
        assert coh.entropy < diag.entropy
        assert coh.value > diag.value

    def test_rejects_nonpositive_beta(self):
        H = HamiltonianDirection(n=T_DIR)
        with pytest.raises(ValueError):
            free_energy(EnergyFrameState(p=0.5), H, 0.0)


class TestCatalyticReachable:
    def test_reflexive(self):
        H = HamiltonianDirection(n=T_DIR)
        s = EnergyFrameState(p=0.4, c=0.1)
        assert catalytic_reachable(s, s, H, beta=1.0)

    def test_mode_inclusion_blocks_new_coherence(self):
        H = HamiltonianDirection(n=T_DIR)
        src = EnergyFrameState(p=0.4, c=0.0)
        tgt = EnergyFrameState(p=0.4, c=0.1)
        assert not catalytic_reachable(src, tgt, H, beta=1.0)

    def test_thermal_state_always_reachable(self, rng):
        H = HamiltonianDirection(n=T_DIR)
        for _ in range(30):
            beta = rng.uniform(0.1, 4.0)
            ctx = ThermalContext.create(beta, H.gap)
            p = rng.uniform(0.0, 1.0)
            c = rng.uniform(0.0, np.sqrt(p * (1 - p)))
            src = EnergyFrameState(p=p, c=c)
            tgt = EnergyFrameState(p=ctx.gamma, c=0.0)
            assert catalytic_reachable(src, tgt, H, beta)

    def test_interval_endpoints_reachable_as_diagonal_targets(self, rng):
        # plain thermal reachability implies the free-energy order
        H = HamiltonianDirection(n=T_DIR)
        for _ in range(50):
            beta = rng.uniform(0.05, 3.0)
            ctx = ThermalContext.create(beta, H.gap)
            p = rng.uniform(0.0, 1.0)
            c = rng.uniform(0.0, np.sqrt(p * (1 - p)))
            src = EnergyFrameState(p=p, c=c)
            iv = reachable_interval(p, ctx)
            for q in (iv.lo, iv.hi):
                assert catalytic_reachable(src, EnergyFrameState(p=q), H, beta)

    def test_catalysis_strictly_extends_coherent_sources(self):
        # a diagonal magic target beyond the thermomajorisation interval
        H = HamiltonianDirection(n=T_DIR)
        beta = 1.0
        src = EnergyFrameState(p=0.3, c=0.2)
        ctx = ThermalContext.create(beta, H.gap)
        iv = reachable_interval(0.3, ctx)
        q = 0.97
        assert q > iv.hi  # outside plain thermal reach
        tgt = EnergyFrameState(p=q)
        assert abs(2 * q - 1) * SQRT3 > 1.0  # nonstabiliser along the axis
        assert catalytic_reachable(src, tgt, H, beta)

    def test_to_magic_set_lies_inside_catalytic_set(self, rng):
        # every plain thermally reachable point passes the catalytic test
        from thermomagic.thermal import coherence_cap

        H = HamiltonianDirection(n=T_DIR)
        for _ in range(10):
            beta = rng.uniform(0.3, 2.5)
            ctx = ThermalContext.create(beta, H.gap)
            p = rng.uniform(0.1, 0.5)
            c = rng.uniform(0.2, 1.0) * np.sqrt(p * (1 - p))
            src = EnergyFrameState(p=p, c=c)
            iv = reachable_interval(p, ctx)
            qs = rng.uniform(iv.lo, iv.hi, size=50)
            caps = np.atleast_1d(coherence_cap(qs, p, c, ctx))
            rs = caps * rng.uniform(0.0, 1.0, size=50)
            for q, r in zip(qs, rs):
                r = min(float(r), np.sqrt(max(q * (1 - q), 0.0)))
                tgt = EnergyFrameState(p=float(q), c=r)
                assert catalytic_reachable(src, tgt, H, beta)


class TestCatalyticCriticalBeta:
    def test_pauli_axis_never(self):
        H = HamiltonianDirection(n=np.array([0.0, 0.0, 1.0]))
        assert catalytic_critical_beta(EnergyFrameState(p=0.3), H) is None

    def test_incoherent_value_matches_entropy_energy_ratio(self):
        # feasibility of the axis boundary target z = 1/||n||_1 crosses where
        # (S_src - S_tgt) / (E_src - E_tgt) = beta
        H = HamiltonianDirection(n=T_DIR)
        src = EnergyFrameState(p=0.3)
        got = catalytic_critical_beta(src, H, beta_max=2.0)
        q_t = 0.5 * (1.0 + 1.0 / SQRT3)
        s = lambda q: -(q * np.log(q) + (1 - q) * np.log(1 - q))
        expected = (s(0.3) - s(q_t)) / ((1 - 2 * 0.3) - (1 - 2 * q_t))
        assert abs(got - expected) <= 1e-6

    def test_never_above_thermal_threshold(self, rng):
        count = 0
        while count < 25:
            n = random_direction(rng, min_l1=1.25)
            H = HamiltonianDirection(n=n)
            p = rng.uniform(0.1, 0.6)
            c = rng.uniform(0.0, 0.8) * np.sqrt(p * (1 - p))
            state = EnergyFrameState(p=p, c=c)
            b_to = critical_beta(state, H, beta_max=6.0)
            b_cat = catalytic_critical_beta(state, H, beta_max=6.0)
            if b_to is None or b_cat is None:
                continue
            assert b_cat <= b_to + 1e-6
            count += 1

    def test_zero_for_low_entropy_coherent_sources(self):
        # a strongly coherent source is purer than the axis boundary target,
        # so the free-energy order holds at every temperature
        H = HamiltonianDirection(n=T_DIR)
        src = EnergyFrameState(p=0.5, c=0.45)
        assert catalytic_critical_beta(src, H, beta_max=4.0) == 0.0

    def test_rejects_bad_beta_max(self):
        H = HamiltonianDirection(n=T_DIR)
        with pytest.raises(ValueError):
            catalytic_critical_beta(EnergyFrameState(p=0.3), H, beta_max=-1.0)
