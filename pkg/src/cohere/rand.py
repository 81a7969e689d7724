"""Seeded random states and bases for property sweeps."""

from __future__ import annotations

import numpy as np

from .linalg import DensityMatrix, MeasurementBasis


def random_density_matrix(dim: int, rng: np.random.Generator, floor: float = 0.0) -> DensityMatrix:
    """Random mixed state from the Ginibre ensemble.

    ``floor`` > 0 mixes in floor * I/d, guaranteeing smallest eigenvalue
    >= floor/d (handy when a full-rank state is required).
    """
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho /= rho.trace().real
    if floor:
        rho = (1.0 - floor) * rho + floor * np.eye(dim) / dim
    return DensityMatrix(rho)


def random_pure_state(dim: int, rng: np.random.Generator) -> DensityMatrix:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return DensityMatrix.pure(v)


def random_diagonal_state(dim: int, rng: np.random.Generator) -> DensityMatrix:
    p = rng.dirichlet(np.ones(dim))
    return DensityMatrix.from_diagonal(p)


def random_basis(dim: int, rng: np.random.Generator) -> MeasurementBasis:
    """Haar-random orthonormal basis via phase-fixed QR."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return MeasurementBasis(q)
