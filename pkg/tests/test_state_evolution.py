"""W-type state construction and dephased evolution."""

import numpy as np
import pytest

from wzeta_dephasing import (ModelParams, StatePrep, evolved_density,
                             initial_density, wzeta_amplitudes)

FIG1 = ModelParams()


class TestAmplitudes:
    def test_w_state_zeta1(self):
        c = wzeta_amplitudes(StatePrep(zeta=1.0))
        expected = np.zeros(8)
        expected[1] = np.sqrt(2) / 2
        expected[2] = 0.5
        expected[4] = 0.5
        assert c == pytest.approx(expected, abs=1e-14)

    def test_zeta_zero(self):
        c = wzeta_amplitudes(StatePrep(zeta=0.0, delta=0.7))
        assert c[2] == 0.0
        assert c[1] == pytest.approx(np.exp(0.7j) / np.sqrt(2), abs=1e-14)
        assert c[4] == pytest.approx(1 / np.sqrt(2), abs=1e-14)

    def test_normalized(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            prep = StatePrep(zeta=rng.uniform(0, 50), delta=rng.uniform(0, 2 * np.pi),
                             phi=rng.uniform(0, 2 * np.pi))
            c = wzeta_amplitudes(prep)
            assert np.sum(np.abs(c) ** 2) == pytest.approx(1.0, abs=1e-14)
            assert np.all(c[[0, 3, 5, 6, 7]] == 0)


class TestInitialDensity:
    def test_fixed_entries(self):
        for z in (1.0, 3.0, 10.0):
            prep = StatePrep(zeta=z, delta=0.4, phi=1.1)
            rho = initial_density(prep)
            assert rho[1, 1] == pytest.approx(0.5, abs=1e-14)
            assert rho[2, 2] == pytest.approx(z / (2 * z + 2), abs=1e-14)
            assert rho[4, 4] == pytest.approx(1 / (2 * z + 2), abs=1e-14)
            assert rho[1, 4] == pytest.approx(np.exp(0.4j) / (2 * np.sqrt(z + 1)), abs=1e-14)

    def test_pure_and_unit_trace(self):
        rho = initial_density(StatePrep(zeta=5.0, delta=0.1, phi=2.0))
        assert np.trace(rho) == pytest.approx(1.0, abs=1e-14)
        assert np.abs(rho @ rho - rho).max() < 1e-14


class TestEvolvedDensity:
    def test_identity_at_t0(self):
        prep = StatePrep(zeta=2.0, delta=0.3, phi=0.9)
        assert np.abs(evolved_density(prep, 0.0, FIG1) - initial_density(prep)).max() < 1e-12

    def test_identity_at_zero_coupling(self):
        p0 = ModelParams(g_a=0.0, g_b=0.0, g_c=0.0)
        prep = StatePrep(zeta=2.0)
        assert np.abs(evolved_density(prep, 1.8, p0) - initial_density(prep)).max() < 1e-12

    def test_diagonal_time_independent(self):
        prep = StatePrep(zeta=4.0)
        rho0 = initial_density(prep)
        for t in (0.5, 1.0, 2.0):
            rho = evolved_density(prep, t, FIG1)
            assert np.abs(np.diag(rho) - np.diag(rho0)).max() < 1e-14

    def test_density_matrix_invariants_on_grid(self):
        rng = np.random.default_rng(41)
        for _ in range(200):
            prep = StatePrep(zeta=rng.uniform(0, 50), delta=rng.uniform(0, 2 * np.pi),
                             phi=rng.uniform(0, 2 * np.pi))
            rho = evolved_density(prep, rng.uniform(0, 2), FIG1)
            assert np.abs(rho - rho.conj().T).max() < 1e-12
            assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.eigvalsh(rho).min() >= -1e-10
            # mirror consistency of the damped coherences
            assert abs(rho[2, 1] - np.conj(rho[1, 2])) < 1e-14
            assert abs(rho[4, 1] - np.conj(rho[1, 4])) < 1e-14
            assert abs(rho[4, 2] - np.conj(rho[2, 4])) < 1e-14

    def test_purity_never_increases(self):
        rng = np.random.default_rng(43)
        for _ in range(50):
            prep = StatePrep(zeta=rng.uniform(0, 20), delta=rng.uniform(0, 2 * np.pi),
                             phi=rng.uniform(0, 2 * np.pi))
            rho0 = initial_density(prep)
            rho = evolved_density(prep, rng.uniform(0, 2), FIG1)
            purity0 = np.trace(rho0 @ rho0).real
            purity = np.trace(rho @ rho).real
            assert purity <= purity0 + 1e-12


def test_prep_validation():
    with pytest.raises(ValueError, match="zeta"):
        StatePrep(zeta=-1.0)
    with pytest.raises(ValueError):
        StatePrep(zeta=float("inf"))
