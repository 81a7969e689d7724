"""Coherence measures computed by explicit optimization over measurement bases.

These are the defining forms: statistics of a candidate sharp measurement
on the state and on its dephased counterpart are compared with a classical
distance, and the distance is optimized over all rank-1 projective bases.
They serve as the independent route that validates the closed-form
expressions (which they match to ~1e-3 with default settings).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _optimize
from .errors import (
    BadParamLengthError,
    DimensionMismatchError,
    InvalidDistributionError,
    LengthMismatchError,
    OptimizerFailureError,
)
from .linalg import DensityMatrix, MeasurementBasis, dephase

_LOG2 = math.log(2.0)

DEFAULT_SEED = 42

# states with an eigenvalue below this are blended toward the identity
# before the fidelity search (vanishing outcome probabilities put cusps in
# the classical-fidelity objective that stall the simplex)
SINGULAR_EIG_THRESHOLD = 1e-6
REGULARIZATION_EPS = 1e-6


@dataclass(frozen=True)
class OptimizerConfig:
    """Multistart direct-search settings.

    ``restarts`` independent searches are seeded from streams derived from
    (seed, restart index); ``max_iters`` caps objective evaluations per
    search and ``tol`` is the final convergence tolerance on the objective.
    """

    restarts: int = 20
    max_iters: int = 2000
    tol: float = 1e-8
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be positive")
        if not (0.0 < self.tol < 1.0):
            raise ValueError("tol must lie in (0, 1)")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must fit in an unsigned 64-bit integer")


def as_distribution(probs) -> np.ndarray:
    """Validate and clip a probability vector.

    Entries may undershoot 0 or overshoot 1 by at most 1e-12 (they are
    clipped); the sum must be 1 within 1e-9.
    """
    p = np.asarray(probs, dtype=np.float64).reshape(-1)
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise InvalidDistributionError("distribution must be a nonempty finite vector")
    if p.min() < -1e-12 or p.max() > 1.0 + 1e-12:
        raise InvalidDistributionError(f"entries outside [0, 1]: {p!r}")
    if abs(p.sum() - 1.0) > 1e-9:
        raise InvalidDistributionError(f"sum {p.sum()!r} differs from 1 beyond 1e-9")
    return np.clip(p, 0.0, 1.0)


def measure_statistics(rho: DensityMatrix, b: MeasurementBasis) -> np.ndarray:
    """Outcome distribution of the sharp measurement ``b`` on ``rho``."""
    if rho.dim != b.dim:
        raise DimensionMismatchError(f"state dim {rho.dim} != basis dim {b.dim}")
    u = b.u
    return as_distribution(np.einsum("ij,jk,ki->i", u.conj().T, rho.mat, u).real)


def kolmogorov_distance(p, q) -> float:
    """Total-variation distance: half the l1 difference."""
    p = as_distribution(p)
    q = as_distribution(q)
    if p.size != q.size:
        raise LengthMismatchError(f"lengths differ: {p.size} vs {q.size}")
    return float(0.5 * np.abs(p - q).sum())


def classical_fidelity(p, q) -> float:
    """Bhattacharyya overlap sum_i sqrt(p_i q_i); 1 iff the distributions match."""
    p = as_distribution(p)
    q = as_distribution(q)
    if p.size != q.size:
        raise LengthMismatchError(f"lengths differ: {p.size} vs {q.size}")
    return float(min(np.sqrt(p * q).sum(), 1.0))


def shannon_entropy(probs) -> float:
    """Entropy in bits with 0 log 0 = 0."""
    p = as_distribution(probs)
    p = p[p > 0.0]
    return float(max(-(p * np.log(p)).sum() / _LOG2, 0.0))


def basis_from_params(theta) -> MeasurementBasis:
    """Chart from d*d real parameters onto the unitary group: U = exp(iH).

    H is Hermitian with theta[:d] on the diagonal and the remaining
    d(d-1)/2 + d(d-1)/2 entries as real/imaginary upper-triangle
    coefficients. theta = 0 gives the identity basis.
    """
    theta = np.asarray(theta, dtype=np.float64).reshape(-1)
    d = math.isqrt(theta.size)
    if d * d != theta.size or d == 0:
        raise BadParamLengthError(f"parameter length {theta.size} is not a positive square")
    h = np.zeros((d, d), dtype=np.complex128)
    h[np.diag_indices(d)] = theta[:d]
    iu = np.triu_indices(d, 1)
    m = d * (d - 1) // 2
    off = theta[d : d + m] + 1j * theta[d + m :]
    h[iu] = off
    h[iu[1], iu[0]] = off.conj()
    w, v = np.linalg.eigh(h)
    return MeasurementBasis((v * np.exp(1j * w)) @ v.conj().T)


def full_rank_regularized(
    rho: DensityMatrix,
    threshold: float = SINGULAR_EIG_THRESHOLD,
    eps: float = REGULARIZATION_EPS,
) -> DensityMatrix:
    """Blend toward the identity when any eigenvalue falls below ``threshold``."""
    if float(np.linalg.eigvalsh(rho.mat).min()) >= threshold:
        return rho
    d = rho.dim
    return DensityMatrix((1.0 - eps) * rho.mat + eps * np.eye(d) / d)


def _run(kind: int, m1: np.ndarray, m2: np.ndarray, n_params: int, cfg: OptimizerConfig) -> float:
    best = _optimize.minimize_kind(
        kind, m1, m2, n_params, cfg.restarts, cfg.max_iters, cfg.tol, cfg.seed
    )
    if not math.isfinite(best):
        raise OptimizerFailureError("all restarts produced a non-finite objective")
    return best


def variational_mod_k(
    rho: DensityMatrix, a: MeasurementBasis, cfg: OptimizerConfig | None = None
) -> float:
    """Largest Kolmogorov distance between measurement statistics of the
    state and of its dephased counterpart, over candidate bases.

    Every candidate is a genuine basis, so the result never exceeds the
    closed form (half the trace distance); with default settings it matches
    it to ~1e-3.
    """
    if rho.dim != a.dim:
        raise DimensionMismatchError(f"state dim {rho.dim} != basis dim {a.dim}")
    cfg = cfg or OptimizerConfig()
    delta = rho.mat - dephase(rho, a).mat
    best = _run(_optimize.KIND_NEG_KOLMOGOROV, delta, delta, rho.dim**2, cfg)
    return max(-best, 0.0)


def variational_mod_f(
    rho: DensityMatrix, a: MeasurementBasis, cfg: OptimizerConfig | None = None
) -> float:
    """One minus the smallest classical fidelity between statistics of the
    state and of its dephased counterpart, over candidate bases.

    Near-singular inputs are regularized first (see full_rank_regularized);
    compare against the closed form of the regularized state.
    """
    if rho.dim != a.dim:
        raise DimensionMismatchError(f"state dim {rho.dim} != basis dim {a.dim}")
    cfg = cfg or OptimizerConfig()
    rho = full_rank_regularized(rho)
    rho_a = dephase(rho, a)
    best = _run(_optimize.KIND_CLASSICAL_FID, rho.mat, rho_a.mat, rho.dim**2, cfg)
    return min(max(1.0 - best, 0.0), 1.0)


def measurement_entropy(rho: DensityMatrix, cfg: OptimizerConfig | None = None) -> float:
    """Smallest Shannon entropy of outcome statistics over sharp measurements.

    Bounded below by the spectral entropy, which it attains (to ~1e-3 with
    default settings) at the eigenbasis of the state.
    """
    cfg = cfg or OptimizerConfig()
    best = _run(_optimize.KIND_SHANNON, rho.mat, rho.mat, rho.dim**2, cfg)
    return max(best, 0.0)


def variational_ed(
    rho: DensityMatrix, a: MeasurementBasis, cfg: OptimizerConfig | None = None
) -> float:
    """Absolute difference of measurement entropies of the state and its
    dephased counterpart."""
    if rho.dim != a.dim:
        raise DimensionMismatchError(f"state dim {rho.dim} != basis dim {a.dim}")
    cfg = cfg or OptimizerConfig()
    return abs(measurement_entropy(rho, cfg) - measurement_entropy(dephase(rho, a), cfg))
