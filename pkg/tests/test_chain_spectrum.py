"""Dressed fields, Bogoliubov angles and mode energies."""

import numpy as np
import pytest

from wzeta_dephasing import (ModelParams, bogoliubov_angle, environment_energy,
                             lambda_values, mode_energy)

FIG1 = ModelParams()

# frozen from a 30-digit mpmath evaluation of the dispersion
XI_N51_K1_ORACLE = 0.7340710647525256


def test_lambda_values_fig1_couplings():
    lam = lambda_values(FIG1)
    expected = [1.6, 1.0, 1.2, 0.6, 1.4, 0.8, 1.0, 0.4]
    assert lam == pytest.approx(expected, abs=1e-14)


def test_lambda_values_zero_coupling():
    p = ModelParams(g_a=0.0, g_b=0.0, g_c=0.0, eta=0.73)
    assert lambda_values(p) == pytest.approx([0.73] * 8, abs=1e-15)


def test_lambda_sign_flip_pairing():
    rng = np.random.default_rng(7)
    for _ in range(20):
        p = ModelParams(g_a=rng.uniform(-1, 1), g_b=rng.uniform(-1, 1),
                        g_c=rng.uniform(-1, 1), eta=rng.uniform(-2, 2))
        lam = lambda_values(p)
        for mu in range(4):
            assert lam[mu] + lam[7 - mu] == pytest.approx(2 * p.eta, abs=1e-14)


class TestBogoliubovAngle:
    def test_axis_cases_gamma_zero(self):
        p = ModelParams(gamma=0.0)
        x = 2 * np.pi * 3 / p.chain_length
        assert bogoliubov_angle(3, np.cos(x) + 0.5, p) == 0.0
        assert bogoliubov_angle(3, np.cos(x) - 0.5, p) == pytest.approx(np.pi)

    def test_pure_imaginary_axis(self):
        p = ModelParams(gamma=1.0)
        x = 2 * np.pi * 5 / p.chain_length
        assert bogoliubov_angle(5, np.cos(x), p) == pytest.approx(np.pi / 2)

    def test_half_angle_identity(self):
        # gamma = 1, lam = 1: theta = pi/2 - x/2 for x in (0, pi)
        p = ModelParams(gamma=1.0)
        for k in range(1, p.n_modes + 1):
            x = 2 * np.pi * k / p.chain_length
            assert bogoliubov_angle(k, 1.0, p) == pytest.approx(np.pi / 2 - x / 2, abs=1e-12)

    def test_range(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            p = ModelParams(gamma=rng.uniform(-2, 2))
            th = bogoliubov_angle(rng.integers(1, p.n_modes + 1),
                                  rng.uniform(-3, 3), p)
            assert -np.pi < th <= np.pi

    def test_degenerate_mode_flagged(self):
        p = ModelParams(gamma=0.0)
        x = 2 * np.pi * 4 / p.chain_length
        with pytest.warns(UserWarning, match="degenerate"):
            th = bogoliubov_angle(4, np.cos(x), p)
        assert th == 0.0


class TestModeEnergy:
    def test_critical_isotropic_simplification(self):
        # alpha = 0, gamma = 1, lam = 1: xi = 4 |sin(x/2)|
        p = ModelParams(gamma=1.0, alpha=0.0)
        for k in (1, 7, 25):
            x = 2 * np.pi * k / p.chain_length
            assert mode_energy(k, 1.0, p) == pytest.approx(4 * abs(np.sin(x / 2)), abs=1e-13)

    def test_ising_free_simplification(self):
        p = ModelParams(gamma=0.0, alpha=0.0)
        for k, lam in [(1, 0.3), (10, 2.0), (25, -1.0)]:
            x = 2 * np.pi * k / p.chain_length
            assert mode_energy(k, lam, p) == pytest.approx(2 * abs(lam - np.cos(x)), abs=1e-13)

    def test_oracle_value(self):
        p = ModelParams(gamma=1.0, alpha=1.0)
        assert mode_energy(1, 1.0, p) == pytest.approx(XI_N51_K1_ORACLE, abs=1e-12)

    def test_nonnegative_without_tilt(self):
        rng = np.random.default_rng(3)
        p0 = ModelParams(alpha=0.0)
        for _ in range(100):
            p = ModelParams(alpha=0.0, gamma=rng.uniform(-2, 2))
            xi = mode_energy(rng.integers(1, p0.n_modes + 1), rng.uniform(-3, 3), p)
            assert xi >= -1e-14


def test_environment_energy_is_mode_energy_at_eta():
    rng = np.random.default_rng(5)
    for _ in range(20):
        p = ModelParams(gamma=rng.uniform(0, 2), alpha=rng.uniform(-1, 1),
                        eta=rng.uniform(0.5, 2))
        for k in range(1, p.n_modes + 1):
            # bit-for-bit identity, not just approximate
            assert environment_energy(k, p) == mode_energy(k, p.eta, p)


def test_environment_energy_oracle():
    p = ModelParams(gamma=1.0, alpha=1.0, eta=1.0)
    assert environment_energy(1, p) == pytest.approx(XI_N51_K1_ORACLE, abs=1e-12)


def test_params_validation():
    with pytest.raises(ValueError, match="odd"):
        ModelParams(chain_length=50)
    with pytest.raises(ValueError, match="temperature"):
        ModelParams(temperature=0.0)
    with pytest.raises(ValueError, match="finite"):
        ModelParams(gamma=float("nan"))
