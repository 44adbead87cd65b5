"""W-type initial state and its dephased density matrix.

Basis ordering: |000>..|111> map to indices 1..8 with qubit A the most
significant bit, so the state populates indices 2 (|001>), 3 (|010>) and
5 (|100>).  Dephasing multiplies each off-diagonal entry by the matching
decoherence factor and leaves the diagonal alone.
"""

import numpy as np

from .decoherence import FactorTriple, factor_triple
from .params import ModelParams, StatePrep


def wzeta_amplitudes(prep: StatePrep) -> np.ndarray:
    """Normalized amplitudes of the W-type state on the 8 basis states.

    Weights 1 : zeta : zeta+1 on |100>, |010>, |001>, phases phi and delta
    on the latter two.  Entry mu-1 holds the amplitude of basis state mu.
    """
    c = np.zeros(8, dtype=complex)
    norm = np.sqrt(2.0 * prep.zeta + 2.0)
    c[4] = 1.0 / norm
    c[2] = np.exp(1j * prep.phi) * np.sqrt(prep.zeta) / norm
    c[1] = np.exp(1j * prep.delta) * np.sqrt(prep.zeta + 1.0) / norm
    return c


def initial_density(prep: StatePrep) -> np.ndarray:
    """8x8 density matrix of the pure W-type state.

    Built as an outer product of the amplitudes, which stays well defined at
    zeta = 0 where the normalized entry-by-entry form would hit 0/0.
    """
    c = wzeta_amplitudes(prep)
    return np.outer(c, c.conj())


def apply_factors(rho0: np.ndarray, factors: FactorTriple) -> np.ndarray:
    """Damp the coherences of an initial W-type density matrix.

    Entries (2,3), (2,5), (3,5) are scaled by f23, f25, f35 and their
    mirrors by the conjugates; everything else is untouched.
    """
    rho = rho0.copy()
    for (i, j), f in (((1, 2), factors.f23), ((1, 4), factors.f25), ((2, 4), factors.f35)):
        rho[i, j] *= f
        rho[j, i] *= np.conj(f)
    return rho


def evolved_density(prep: StatePrep, t, params: ModelParams) -> np.ndarray:
    """Density matrix of the three-qubit system after dephasing for time t."""
    return apply_factors(initial_density(prep), factor_triple(t, params))
