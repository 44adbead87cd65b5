"""Complex decoherence factors damping the three-qubit coherences.

The coherence between basis states mu and nu decays by a factor F_mu_nu(t)
that is a product over the positive momentum modes of the chain of
thermally weighted interference terms.  |F| <= 1 always, F(0) = 1, and
F_mu_mu = 1 (populations are untouched).
"""

from dataclasses import dataclass

import numpy as np

from .chain_spectrum import bogoliubov_angle, lambda_values, mode_energy
from .params import ModelParams


@dataclass(frozen=True)
class FactorTriple:
    """The three decoherence factors of the W-type state at one time."""

    f23: complex
    f25: complex
    f35: complex
    time: float


def _mode_data(params: ModelParams, lam):
    """(theta, xi) arrays over k = 1..M at dressed field lam."""
    k = np.arange(1, params.n_modes + 1)
    return bogoliubov_angle(k, lam, params), mode_energy(k, lam, params)


def _interference_terms(u, v, dmu, dnu, dmunu, trig):
    """Shared structure of the two interference terms (trig = sin or cos)."""
    return (u * v * trig(dmu / 2) * trig(dnu / 2) * np.cos(dmunu / 2)
            - u * trig(dmu / 2) ** 2 - v * trig(dnu / 2) ** 2 + 1.0)


def mode_term_a(k, mu, nu, t, params: ModelParams):
    """Vacuum-weighted interference term of mode k for the (mu, nu) coherence."""
    return _per_mode(mu, nu, t, params)[0][np.asarray(k) - 1]


def mode_term_b(k, mu, nu, t, params: ModelParams):
    """Doubly excited interference term of mode k for the (mu, nu) coherence."""
    return _per_mode(mu, nu, t, params)[1][np.asarray(k) - 1]


def _per_mode(mu, nu, t, params: ModelParams):
    """Per-mode arrays (A_k, B_k, xi_mu, xi_nu, xi_env) over k = 1..M."""
    lam = lambda_values(params)
    th_mu, xi_mu = _mode_data(params, lam[mu - 1])
    th_nu, xi_nu = _mode_data(params, lam[nu - 1])
    th_env, xi_env = _mode_data(params, params.eta)

    u = 1.0 - np.exp(2j * t * xi_mu)
    v = 1.0 - np.exp(-2j * t * xi_nu)
    dmu = th_mu - th_env
    dnu = th_nu - th_env
    dmunu = th_mu - th_nu

    a = _interference_terms(u, v, dmu, dnu, dmunu, np.sin)
    b = _interference_terms(u, v, dmu, dnu, dmunu, np.cos)
    return a, b, xi_mu, xi_nu, xi_env


def decoherence_factor(mu, nu, t, params: ModelParams) -> complex:
    """Decoherence factor F_mu_nu(t) for basis labels mu, nu in {1..8}.

    Per-mode factors are multiplied in ascending k so repeated runs are
    byte-for-byte reproducible.
    """
    a, b, xi_mu, xi_nu, xi_env = _per_mode(mu, nu, t, params)
    beta = params.beta
    w = np.exp(-beta * xi_env)
    # per-mode normalization: the unique choice making F identically 1 on the
    # diagonal and at t = 0
    z = (1.0 + w) ** 2
    phase = np.exp(1j * t * (xi_mu - xi_nu))
    factors = phase / z * (a + 2.0 * w * np.exp(1j * t * (xi_nu - xi_mu)) + w ** 2 * b)
    out = 1.0 + 0.0j
    for f in factors:
        out *= f
    return out


def factor_triple(t, params: ModelParams) -> FactorTriple:
    """Bundle F_23, F_25, F_35 at time t (the only factors the W-type state uses)."""
    return FactorTriple(
        f23=decoherence_factor(2, 3, t, params),
        f25=decoherence_factor(2, 5, t, params),
        f35=decoherence_factor(3, 5, t, params),
        time=float(t),
    )
