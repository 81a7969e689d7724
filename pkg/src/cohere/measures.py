"""Closed-form coherence measures relative to a preferred basis.

Three measures of how far a state sits from its dephased counterpart:
an entropy difference (bits), half the trace distance, and one minus the
quantum fidelity. All vanish exactly on states diagonal in the basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InvalidDistributionError
from .linalg import (
    DensityMatrix,
    MeasurementBasis,
    dephase,
    matrix_sqrt,
    trace_norm,
    von_neumann_entropy,
)

_FAITHFUL_TOL = 1e-9


@dataclass(frozen=True)
class CoherenceReport:
    """Bundle of the three measures evaluated in one basis."""

    ed: float
    mod_k: float
    mod_f: float
    basis_label: str = "computational"

    def __post_init__(self):
        for name in ("ed", "mod_k", "mod_f"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < -1e-12:
                raise ValueError(f"{name} = {v!r} is not a finite nonnegative value")
        if self.mod_k > 1.0 + 1e-12:
            raise ValueError(f"mod_k = {self.mod_k!r} exceeds 1")
        # mod_k <= tol pins the state to its dephased counterpart, so the
        # other two must vanish with it (the converse is not checkable here:
        # ed scales quadratically in small off-diagonals).
        if self.mod_k <= _FAITHFUL_TOL and max(self.ed, self.mod_f) > _FAITHFUL_TOL:
            raise ValueError("measures disagree about vanishing coherence")


def _check_dims(rho: DensityMatrix, a: MeasurementBasis):
    if rho.dim != a.dim:
        raise DimensionMismatchError(f"state dim {rho.dim} != basis dim {a.dim}")


def coherence_ed(rho: DensityMatrix, a: MeasurementBasis) -> float:
    """Entropy gained by dephasing: S(rho_a) - S(rho), in bits.

    Equals the relative entropy between the state and its dephased
    counterpart; clamped at zero against rounding.
    """
    _check_dims(rho, a)
    diff = von_neumann_entropy(dephase(rho, a)) - von_neumann_entropy(rho)
    if diff < -1e-9:
        raise ArithmeticError(f"dephasing lowered entropy by {-diff:.3e}")
    return max(diff, 0.0)


def coherence_mod_k(rho: DensityMatrix, a: MeasurementBasis) -> float:
    """Half the trace norm of rho minus its dephased counterpart."""
    _check_dims(rho, a)
    return 0.5 * trace_norm(rho.mat - dephase(rho, a).mat)


def quantum_fidelity(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """Square-root fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho))."""
    if rho.dim != sigma.dim:
        raise DimensionMismatchError(f"state dims differ: {rho.dim} vs {sigma.dim}")
    s = matrix_sqrt(rho.mat)
    inner = matrix_sqrt(s @ sigma.mat @ s)
    return float(min(inner.trace().real, 1.0))


def coherence_mod_f(rho: DensityMatrix, a: MeasurementBasis) -> float:
    """One minus the quantum fidelity with the dephased counterpart."""
    _check_dims(rho, a)
    return max(1.0 - quantum_fidelity(rho, dephase(rho, a)), 0.0)


def qubit_coherence_bound(p0: float, p1: float) -> float:
    """Largest off-diagonal magnitude a qubit with statistics (p0, p1) allows.

    sqrt(p0 p1) is half the standard deviation of the measured observable;
    deterministic statistics force zero coherence.
    """
    if p0 < 0 or p1 < 0 or abs(p0 + p1 - 1.0) > 1e-9:
        raise InvalidDistributionError(f"({p0!r}, {p1!r}) is not a binary distribution")
    return math.sqrt(p0 * p1)


def coherence_report(
    rho: DensityMatrix, a: MeasurementBasis, basis_label: str = "computational"
) -> CoherenceReport:
    """Evaluate all three measures in one basis."""
    return CoherenceReport(
        ed=coherence_ed(rho, a),
        mod_k=coherence_mod_k(rho, a),
        mod_f=coherence_mod_f(rho, a),
        basis_label=basis_label,
    )


def max_offdiagonal(rho: DensityMatrix, a: MeasurementBasis) -> float:
    """Largest off-diagonal magnitude of the state expressed in basis ``a``."""
    _check_dims(rho, a)
    m = a.u.conj().T @ rho.mat @ a.u
    off = np.abs(m - np.diag(np.diagonal(m)))
    return float(off.max())
