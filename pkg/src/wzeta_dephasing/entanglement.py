"""Negativity of the three-qubit state across each one-qubit bipartition.

The authoritative route is the direct one: partial-transpose the 8x8 density
matrix on the chosen qubit, take the trace norm via a dense Hermitian
eigensolve, and form N = (||rho^T|| - 1) / 2.  The published closed-form
expressions for the three cuts are transcribed verbatim for cross-validation;
see docs/closed_form_crosscheck.md for the measured status of each.
"""

from dataclasses import dataclass

import numpy as np

from .decoherence import FactorTriple
from .params import StatePrep

SUBSYSTEMS = ("A", "B", "C")
_QUBIT_AXIS = {"A": 0, "B": 1, "C": 2}

HERMITICITY_TOL = 1e-10
_IMAG_TOL = 1e-9


@dataclass(frozen=True)
class NegativityTriple:
    """Negativity across the three one-qubit-vs-rest cuts."""

    n_a_bc: float
    n_b_ca: float
    n_c_ab: float


def partial_transpose(rho: np.ndarray, subsystem: str) -> np.ndarray:
    """Transpose the indices of one qubit only (A, B or C; A is the msb)."""
    axis = _QUBIT_AXIS[subsystem]
    r = np.asarray(rho).reshape(2, 2, 2, 2, 2, 2)
    return np.swapaxes(r, axis, axis + 3).reshape(8, 8)


def hermitian_eigenvalues(h: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of an 8x8 Hermitian matrix.

    The input is symmetrized as (h + h^dag)/2 before solving; asymmetry
    beyond HERMITICITY_TOL means the caller handed over a corrupted matrix
    and raises.
    """
    h = np.asarray(h)
    asym = np.abs(h - h.conj().T).max()
    if asym >= HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian: max|h - h^dag| = {asym:.3e}")
    return np.linalg.eigvalsh((h + h.conj().T) / 2.0)


def trace_norm(h: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.abs(hermitian_eigenvalues(h)).sum())


def negativity(rho: np.ndarray, subsystem: str, clamp: bool = True) -> float:
    """Negativity across the subsystem-vs-rest cut; in [0, 1/2] for 2x4 cuts.

    Tiny negative round-off is clamped to 0 unless clamp=False.
    """
    raw = (trace_norm(partial_transpose(rho, subsystem)) - 1.0) / 2.0
    if clamp and -1e-12 < raw < 0.0:
        return 0.0
    return raw


def negativity_triple(rho: np.ndarray) -> NegativityTriple:
    """Negativity of all three one-qubit cuts of an 8x8 density matrix."""
    return NegativityTriple(*(negativity(rho, s) for s in SUBSYSTEMS))


def closed_form_negativity(prep: StatePrep, factors: FactorTriple, subsystem: str) -> float:
    """Published closed-form negativity for one cut, transcribed verbatim.

    Complex square roots use the principal branch; the phase prefactors then
    cancel and the result must be real up to round-off.  Kept for
    cross-validation against the direct method only -- the A-cut expression
    is known to deviate from the direct method whenever |f23| < 1
    (docs/closed_form_crosscheck.md).
    """
    z = prep.zeta
    if z <= 0.0:
        raise ValueError("closed-form expressions require zeta > 0")
    ph = np.exp(-1j * (prep.delta + prep.phi))
    ph2 = np.exp(2j * (prep.delta + prep.phi))
    a23, a25, a35 = abs(factors.f23), abs(factors.f25), abs(factors.f35)
    rz = np.sqrt(z * (z + 1.0))

    if subsystem == "A":
        base = rz * (2.0 * z + 1.0)
        inner = ph * np.sqrt(ph2 * z * (z + 1.0) ** 2 * (4.0 * z * (z + 1.0) * a23 ** 2 + 1.0))
        damp = abs(np.sqrt((z + 1.0) * a25 ** 2 + z * a35 ** 2))
        expr = (-z * abs(base - inner) - abs(base - inner)
                - z * abs(base + inner) - abs(base + inner)
                - 4.0 * rz * (z + 1.0) ** 1.5 * damp
                + 4.0 * z * rz * (z + 1.0) ** 1.5 + 2.0 * rz * (z + 1.0) ** 1.5)
        value = -expr / (8.0 * (z + 1.0) ** 2.5 * rz)
    elif subsystem == "B":
        base = np.sqrt(z) * (z + 1.0) * (z + 2.0)
        inner = ph * np.sqrt(ph2 * z * (z + 1.0) ** 2 * (z ** 2 + 4.0 * (z + 1.0) * a25 ** 2))
        damp = abs(np.sqrt((z + 1.0) * a23 ** 2 + a35 ** 2))
        expr = (-z * abs(base - inner) - abs(base - inner)
                - z * abs(base + inner) - abs(base + inner)
                - 4.0 * np.sqrt(z) * rz * (z + 1.0) ** 1.5 * damp
                + 2.0 * z * rz * (z + 1.0) ** 1.5 + 4.0 * rz * (z + 1.0) ** 1.5)
        value = -expr / (8.0 * (z + 1.0) ** 2.5 * rz)
    elif subsystem == "C":
        base = np.sqrt(z) * (z + 1.0) ** 2
        inner = ph * np.sqrt(ph2 * z * (z + 1.0) ** 2 * (4.0 * z * a35 ** 2 + (z - 2.0) * z + 1.0))
        damp = abs(np.sqrt(z * a23 ** 2 + a25 ** 2))
        expr = (-abs(base - inner) - abs(base + inner)
                - 4.0 * z * rz * damp - 4.0 * rz * damp
                + 2.0 * rz * (z + 1.0) ** 1.5)
        value = -expr / (8.0 * (z + 1.0) ** 1.5 * rz)
    else:
        raise ValueError(f"unknown subsystem {subsystem!r}")

    value = complex(value)
    if abs(value.imag) >= _IMAG_TOL:
        raise ValueError(f"closed-form result has imaginary residue {value.imag:.3e}")
    return value.real
