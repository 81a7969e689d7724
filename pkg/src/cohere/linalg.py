"""Dense complex linear algebra: states, bases, dephasing, spectral helpers.

All matrices are d x d complex128 arrays with d <= 16. Values are validated
at construction and frozen (read-only buffers), so instances are safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidBasisError,
    InvalidStateError,
    NotHermitianError,
    NotPSDError,
)

TOL_HERM = 1e-10
TOL_TRACE = 1e-10
TOL_PSD = 1e-10
TOL_UNITARY = 1e-10
TOL_RECONSTRUCT = 1e-8
MAX_DIM = 16

_LOG2 = np.log(2.0)


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a square, finite complex128 matrix of supported dimension."""
    arr = np.array(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[0] > MAX_DIM:
        raise ValueError(f"dimension {arr.shape[0]} outside supported range 1..{MAX_DIM}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("matrix entries must be finite")
    return arr


def hermitian_deviation(m: np.ndarray) -> float:
    """Largest entrywise deviation of m from its conjugate transpose."""
    return float(np.abs(m - m.conj().T).max())


def require_hermitian(m: np.ndarray, tol: float = TOL_HERM) -> np.ndarray:
    """Validate Hermiticity and return the exactly-Hermitian part (m + m†)/2."""
    dev = hermitian_deviation(m)
    if dev > tol:
        raise NotHermitianError(f"deviation from Hermiticity {dev:.3e} exceeds {tol:.0e}")
    return 0.5 * (m + m.conj().T)


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Unit-trace positive-semidefinite Hermitian state.

    Validation tolerances: Hermiticity and trace within 1e-10, eigenvalues
    allowed down to -1e-10 (floating-point drift).
    """

    mat: np.ndarray

    def __post_init__(self):
        arr = as_complex_matrix(self.mat)
        if hermitian_deviation(arr) > TOL_HERM:
            raise InvalidStateError(
                f"state deviates from Hermiticity by {hermitian_deviation(arr):.3e}"
            )
        arr = 0.5 * (arr + arr.conj().T)
        tr = float(arr.trace().real)
        if abs(tr - 1.0) > TOL_TRACE:
            raise InvalidStateError(f"trace {tr!r} differs from 1 beyond {TOL_TRACE:.0e}")
        lo = float(np.linalg.eigvalsh(arr).min())
        if lo < -TOL_PSD:
            raise InvalidStateError(f"negative eigenvalue {lo:.3e} below -{TOL_PSD:.0e}")
        object.__setattr__(self, "mat", _freeze(arr))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @classmethod
    def pure(cls, amplitudes) -> "DensityMatrix":
        """|psi><psi| from a (not necessarily normalized) state vector."""
        v = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(v)
        if norm == 0:
            raise InvalidStateError("zero state vector")
        v = v / norm
        return cls(np.outer(v, v.conj()))

    @classmethod
    def from_diagonal(cls, probs) -> "DensityMatrix":
        """Incoherent state with the given diagonal."""
        return cls(np.diag(np.asarray(probs, dtype=np.complex128)))

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=np.complex128) / dim)


@dataclass(frozen=True, eq=False)
class MeasurementBasis:
    """Ordered orthonormal basis; columns are the measurement directions."""

    u: np.ndarray

    def __post_init__(self):
        arr = as_complex_matrix(self.u)
        dev = float(np.abs(arr.conj().T @ arr - np.eye(arr.shape[0])).max())
        if dev > TOL_UNITARY:
            raise InvalidBasisError(f"columns not orthonormal: deviation {dev:.3e}")
        object.__setattr__(self, "u", _freeze(arr))

    @property
    def dim(self) -> int:
        return self.u.shape[0]

    def column(self, i: int) -> np.ndarray:
        return self.u[:, i]

    def projector(self, i: int) -> np.ndarray:
        v = self.u[:, i]
        return np.outer(v, v.conj())

    @classmethod
    def computational(cls, dim: int) -> "MeasurementBasis":
        return cls(np.eye(dim, dtype=np.complex128))

    @classmethod
    def fourier(cls, dim: int) -> "MeasurementBasis":
        """Discrete-Fourier basis (multiport beam-splitter analogue)."""
        j, k = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
        return cls(np.exp(2j * np.pi * j * k / dim) / np.sqrt(dim))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""

    eigenvalues: np.ndarray
    eigenvectors: MeasurementBasis

    def __post_init__(self):
        w = np.asarray(self.eigenvalues, dtype=np.float64).reshape(-1)
        if np.any(np.diff(w) < 0):
            raise ValueError("eigenvalues must be sorted ascending")
        if w.shape[0] != self.eigenvectors.dim:
            raise DimensionMismatchError("eigenvalue count does not match basis dimension")
        object.__setattr__(self, "eigenvalues", _freeze(w))

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors.u
        return (v * self.eigenvalues) @ v.conj().T


def eigh(m: np.ndarray) -> Spectrum:
    """Spectral decomposition of a Hermitian matrix.

    Raises NotHermitianError beyond the 1e-10 tolerance; the returned
    decomposition reconstructs the input within 1e-8.
    """
    h = require_hermitian(as_complex_matrix(m))
    w, v = np.linalg.eigh(h)
    spec = Spectrum(w, MeasurementBasis(v))
    err = float(np.abs(spec.reconstruct() - h).max())
    if err > TOL_RECONSTRUCT:
        raise ArithmeticError(f"eigendecomposition reconstruction error {err:.3e}")
    return spec


def dephase(rho: DensityMatrix, a: MeasurementBasis) -> DensityMatrix:
    """Project out off-diagonal terms in basis ``a``.

    The result is the classical mixture counterpart: the ensemble left by
    sharply measuring ``a`` and discarding the outcome. Statistics of ``a``
    itself are unchanged.
    """
    if rho.dim != a.dim:
        raise DimensionMismatchError(f"state dim {rho.dim} != basis dim {a.dim}")
    u = a.u
    diag = np.einsum("ij,jk,ki->i", u.conj().T, rho.mat, u).real
    return DensityMatrix((u * diag) @ u.conj().T)


def trace_norm(m: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    h = require_hermitian(as_complex_matrix(m))
    return float(np.abs(np.linalg.eigvalsh(h)).sum())


def matrix_sqrt(m: np.ndarray) -> np.ndarray:
    """Positive square root of a PSD Hermitian matrix.

    Eigenvalues in [-1e-10, 0) are clipped to zero; anything more negative
    raises NotPSDError.
    """
    h = require_hermitian(as_complex_matrix(m))
    w, v = np.linalg.eigh(h)
    if w[0] < -TOL_PSD:
        raise NotPSDError(f"eigenvalue {w[0]:.3e} below -{TOL_PSD:.0e}")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Spectral entropy -sum(p log2 p) in bits, with 0 log 0 = 0."""
    w = np.clip(np.linalg.eigvalsh(rho.mat), 0.0, 1.0)
    w = w[w > 0.0]
    return float(max(-(w * np.log(w)).sum() / _LOG2, 0.0))
