"""Parameter containers for the chain environment and the initial three-qubit state."""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ModelParams:
    """Environment chain and qubit-chain coupling parameters.

    gamma : in-plane anisotropy of the chain couplings
    eta : transverse field on the chain
    alpha : three-site (XZY-YZX) interaction strength
    g_a, g_b, g_c : coupling of qubits A, B, C to the chain
    chain_length : number of chain sites N (odd, >= 3)
    temperature : chain temperature T, with k_B = 1 so beta = 1/T
    """

    gamma: float = 1.0
    eta: float = 1.0
    alpha: float = 1.0
    g_a: float = 0.1
    g_b: float = 0.2
    g_c: float = 0.3
    chain_length: int = 51
    temperature: float = 0.5

    def __post_init__(self):
        for name in ("gamma", "eta", "alpha", "g_a", "g_b", "g_c", "temperature"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        n = self.chain_length
        if n != int(n) or n < 3 or n % 2 == 0:
            raise ValueError(f"chain length must be odd and >= 3, got {n!r}")
        if self.temperature <= 0:
            raise ValueError(f"temperature must be > 0, got {self.temperature!r}")

    @property
    def n_modes(self):
        """Number of positive momentum modes M = (N - 1) / 2."""
        return (self.chain_length - 1) // 2

    @property
    def beta(self):
        return 1.0 / self.temperature


@dataclass(frozen=True)
class StatePrep:
    """Preparation of the three-qubit W-type initial state.

    The state puts weights 1 : zeta : zeta+1 on |100>, |010>, |001>,
    with relative phases phi on |010> and delta on |001>.
    """

    zeta: float = 1.0
    delta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.zeta) and self.zeta >= 0):
            raise ValueError(f"zeta must be finite and >= 0, got {self.zeta!r}")
        for name in ("delta", "phi"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
