"""Dressed fields, Bogoliubov angles and quasiparticle energies of the chain.

Each three-qubit computational basis state mu in {1..8} shifts the chain's
effective transverse field to lambda_mu = +/-g_a +/-g_b +/-g_c + eta (plus sign
for a qubit in |0>, minus for |1>, with A the most significant bit).  The chain
dispersion is evaluated at these dressed fields for the positive momentum modes
k = 1..M of the odd-length ring, M = (N - 1) / 2.
"""

import warnings

import numpy as np

from .params import ModelParams


def lambda_values(params: ModelParams) -> np.ndarray:
    """Dressed field lambda_mu for every basis label mu = 1..8.

    Returns an array of 8 values; entry mu-1 holds lambda_mu.
    """
    lam = np.empty(8)
    g = (params.g_a, params.g_b, params.g_c)
    for mu in range(1, 9):
        bits = ((mu - 1) >> 2 & 1, (mu - 1) >> 1 & 1, (mu - 1) & 1)
        lam[mu - 1] = params.eta + sum((1 - 2 * b) * gx for b, gx in zip(bits, g))
    return lam


def bogoliubov_angle(k, lam, params: ModelParams):
    """Rotation angle of mode k at dressed field lam, in (-pi, pi].

    Quadrant is resolved by the two-argument arctangent of
    (gamma*sin x, lam - cos x) with x = 2*pi*k/N; only differences of these
    angles enter the dynamics, so any consistent convention is equivalent.
    """
    x = 2.0 * np.pi * np.asarray(k) / params.chain_length
    y = params.gamma * np.sin(x)
    z = lam - np.cos(x)
    if np.any((y == 0.0) & (z == 0.0)):
        warnings.warn("degenerate mode: gamma*sin x = 0 and lam = cos x; angle set to 0",
                      stacklevel=2)
    theta = np.arctan2(y, z)
    # arctan2(-0.0, z<0) gives -pi; fold onto the (-pi, pi] convention
    theta = np.where(theta == -np.pi, np.pi, theta)
    return theta if theta.ndim else float(theta)


def mode_energy(k, lam, params: ModelParams):
    """Quasiparticle energy of mode k at dressed field lam.

    The three-site interaction tilts the dispersion by 2*alpha*sin(4*pi*k/N);
    the tilted branch may be negative for large |alpha| and is used verbatim.
    """
    x = 2.0 * np.pi * np.asarray(k) / params.chain_length
    root = np.sqrt((params.gamma * np.sin(x)) ** 2 + (lam - np.cos(x)) ** 2)
    xi = 2.0 * params.alpha * np.sin(2.0 * x) + 2.0 * root
    return xi if xi.ndim else float(xi)


def environment_energy(k, params: ModelParams):
    """Energy of mode k at the bare field eta; sets the thermal weights."""
    return mode_energy(k, params.eta, params)
