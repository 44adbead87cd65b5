"""Exact dephasing dynamics and negativity of a three-qubit W-type state
coupled to an anisotropic XY spin chain with a three-site interaction."""

from .chain_spectrum import (bogoliubov_angle, environment_energy, lambda_values,
                             mode_energy)
from .decoherence import FactorTriple, decoherence_factor, factor_triple
from .entanglement import (NegativityTriple, closed_form_negativity,
                           hermitian_eigenvalues, negativity, negativity_triple,
                           partial_transpose, trace_norm)
from .params import ModelParams, StatePrep
from .state_evolution import evolved_density, initial_density, wzeta_amplitudes
from .sweep import ResultTable, RunConfig, SweepAxis, emit, run_sweep

__all__ = [
    "ModelParams", "StatePrep",
    "lambda_values", "bogoliubov_angle", "mode_energy", "environment_energy",
    "FactorTriple", "decoherence_factor", "factor_triple",
    "wzeta_amplitudes", "initial_density", "evolved_density",
    "partial_transpose", "hermitian_eigenvalues", "trace_norm",
    "negativity", "negativity_triple", "closed_form_negativity", "NegativityTriple",
    "SweepAxis", "RunConfig", "ResultTable", "run_sweep", "emit",
]

__version__ = "0.1.0"
