"""Derivative-free direct search used by the variational measures.

A compact Nelder-Mead simplex with random restarts, JIT-compiled so that
hundreds of optimizations (each thousands of objective evaluations on d<=4
matrices) finish in seconds. Objectives are selected by an integer kind so
the whole restart loop stays inside compiled code.

Every objective is phrased as a minimization; callers negate when they
need a supremum.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# objective kinds
KIND_NEG_KOLMOGOROV = 0  # -1/2 sum_i |diag_i(U^H m1 U)|        (m1 = rho - rho_a)
KIND_CLASSICAL_FID = 1  # sum_i sqrt(p_i q_i), p/q from m1/m2  (m1 = rho, m2 = rho_a)
KIND_SHANNON = 2  # -sum_i p_i log2 p_i, p from m1
KIND_NEG_PHASE_VIS = 3  # -1/2 sum_i |p_i - q_i| over a phase pair (m1 = state in
#                         preferred coords, m2 = final basis in preferred coords)

_LOG2 = np.log(2.0)

# multistart shape: cheap exploratory searches from every restart, then one
# tight polish from the best exploratory point
COARSE_STEP = 0.8
COARSE_XATOL = 3e-2
COARSE_FATOL = 1e-5
COARSE_MAXFEV_PER_PARAM = 80
POLISH_STEP = 0.05
POLISH_XATOL = 1e-6


@njit(cache=True)
def _objective(kind, theta, m1, m2):
    d = m1.shape[0]
    if kind == KIND_NEG_PHASE_VIS:
        nf = d - 1
        e1 = np.empty(d, dtype=np.complex128)
        e2 = np.empty(d, dtype=np.complex128)
        val = 0.0
        for i in range(d):
            for r in range(d):
                ph1 = 0.0 if r == 0 else theta[r - 1]
                ph2 = 0.0 if r == 0 else theta[nf + r - 1]
                e1[r] = np.exp(-1j * ph1) * m2[r, i]
                e2[r] = np.exp(-1j * ph2) * m2[r, i]
            pi = 0.0
            qi = 0.0
            for r in range(d):
                accp = 0.0 + 0.0j
                accq = 0.0 + 0.0j
                for c in range(d):
                    accp += m1[r, c] * e1[c]
                    accq += m1[r, c] * e2[c]
                pi += (np.conj(e1[r]) * accp).real
                qi += (np.conj(e2[r]) * accq).real
            val += abs(pi - qi)
        return -0.5 * val

    # remaining kinds search over bases U = exp(iH), H Hermitian from theta:
    # d diagonal entries, then d(d-1)/2 real and d(d-1)/2 imaginary
    # upper-triangle coefficients
    H = np.zeros((d, d), dtype=np.complex128)
    for i in range(d):
        H[i, i] = theta[i]
    m = d * (d - 1) // 2
    k = 0
    for i in range(d):
        for j in range(i + 1, d):
            H[i, j] = complex(theta[d + k], theta[d + m + k])
            H[j, i] = np.conj(H[i, j])
            k += 1
    w, v = np.linalg.eigh(H)
    u = (v * np.exp(1j * w)) @ v.conj().T

    if kind == KIND_NEG_KOLMOGOROV:
        mu = m1 @ u
        s = 0.0
        for i in range(d):
            acc = 0.0
            for r in range(d):
                acc += (np.conj(u[r, i]) * mu[r, i]).real
            s += abs(acc)
        return -0.5 * s

    m1u = m1 @ u
    if kind == KIND_SHANNON:
        ent = 0.0
        for i in range(d):
            p = 0.0
            for r in range(d):
                p += (np.conj(u[r, i]) * m1u[r, i]).real
            if p > 1e-300:
                ent -= p * np.log(p) / _LOG2
        return ent

    m2u = m2 @ u
    s = 0.0
    for i in range(d):
        p = 0.0
        q = 0.0
        for r in range(d):
            p += (np.conj(u[r, i]) * m1u[r, i]).real
            q += (np.conj(u[r, i]) * m2u[r, i]).real
        if p < 0.0:
            p = 0.0
        if q < 0.0:
            q = 0.0
        s += np.sqrt(p * q)
    return s


@njit(cache=True)
def _nelder_mead(kind, m1, m2, x0, step, xatol, fatol, maxfev):
    """Standard simplex search; returns (best_x, best_f, evaluations)."""
    n = x0.shape[0]
    sim = np.empty((n + 1, n))
    fx = np.empty(n + 1)
    sim[0] = x0
    fx[0] = _objective(kind, x0, m1, m2)
    nev = 1
    for k in range(n):
        y = x0.copy()
        y[k] += step
        sim[k + 1] = y
        fx[k + 1] = _objective(kind, y, m1, m2)
        nev += 1
    while nev < maxfev:
        order = np.argsort(fx)
        sim = sim[order]
        fx = fx[order]
        fspread = fx[n] - fx[0]
        xspread = 0.0
        for i in range(1, n + 1):
            for k in range(n):
                diff = abs(sim[i, k] - sim[0, k])
                if diff > xspread:
                    xspread = diff
        if fspread <= fatol and xspread <= xatol:
            break
        centroid = np.zeros(n)
        for i in range(n):
            centroid += sim[i]
        centroid /= n
        xr = centroid + (centroid - sim[n])
        fr = _objective(kind, xr, m1, m2)
        nev += 1
        if fr < fx[0]:
            xe = centroid + 2.0 * (centroid - sim[n])
            fe = _objective(kind, xe, m1, m2)
            nev += 1
            if fe < fr:
                sim[n] = xe
                fx[n] = fe
            else:
                sim[n] = xr
                fx[n] = fr
        elif fr < fx[n - 1]:
            sim[n] = xr
            fx[n] = fr
        else:
            if fr < fx[n]:
                xc = centroid + 0.5 * (xr - centroid)
            else:
                xc = centroid + 0.5 * (sim[n] - centroid)
            fc = _objective(kind, xc, m1, m2)
            nev += 1
            if fc < min(fr, fx[n]):
                sim[n] = xc
                fx[n] = fc
            else:
                for i in range(1, n + 1):
                    sim[i] = sim[0] + 0.5 * (sim[i] - sim[0])
                    fx[i] = _objective(kind, sim[i], m1, m2)
                nev += n
    ib = np.argmin(fx)
    return sim[ib].copy(), fx[ib], nev


@njit(cache=True)
def _multistart(kind, m1, m2, starts, coarse_maxfev, polish_fatol, polish_maxfev):
    """Coarse search from every start, tight polish from the best one.

    The best value is a minimum over all restarts plus the polish, so the
    result does not depend on the order restarts are evaluated in (ties go
    to the lowest restart index via strict improvement).
    """
    nstarts = starts.shape[0]
    best_f = np.inf
    best_x = starts[0].copy()
    for r in range(nstarts):
        x, f, _ = _nelder_mead(
            kind, m1, m2, starts[r], COARSE_STEP, COARSE_XATOL, COARSE_FATOL, coarse_maxfev
        )
        if f < best_f:
            best_f = f
            best_x = x
    x, f, _ = _nelder_mead(
        kind, m1, m2, best_x, POLISH_STEP, POLISH_XATOL, polish_fatol, polish_maxfev
    )
    if f < best_f:
        best_f = f
        best_x = x
    return best_x, best_f


def minimize_kind(
    kind: int,
    m1: np.ndarray,
    m2: np.ndarray,
    n_params: int,
    restarts: int,
    max_iters: int,
    tol: float,
    seed: int,
) -> float:
    """Run the multistart search; restart r draws its start from stream (seed, r)."""
    starts = np.empty((restarts, n_params))
    for r in range(restarts):
        starts[r] = np.random.default_rng([seed, r]).uniform(-np.pi, np.pi, n_params)
    coarse_maxfev = min(max_iters, COARSE_MAXFEV_PER_PARAM * n_params)
    _, best = _multistart(
        kind,
        np.ascontiguousarray(m1),
        np.ascontiguousarray(m2),
        starts,
        coarse_maxfev,
        tol,
        max_iters,
    )
    return float(best)
