"""Hot numeric kernels: sparse polynomial batch evaluation and gradients.

Every sampled supremum (Bloch seminorms, sigma estimates, spectrum
clouds) reduces to evaluating a sparse multi-index polynomial and its
gradient over tens of thousands of points. These two kernels carry
numba @njit versions with a pure-numpy fallback.

Backend selection: env var BLOCHKIT_NUMBA. Unset or truthy -> numba
when importable; "0"/"false"/"off" -> numpy fallback. When numba is
active, large batches still route to the numpy kernels, which are
faster once their per-call overhead is amortized.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

_flag = os.environ.get("BLOCHKIT_NUMBA", "1").strip().lower()
USE_NUMBA = HAVE_NUMBA and _flag not in ("0", "false", "off", "no")


def poly_eval_numpy(pows: np.ndarray, coeffs: np.ndarray, Z: np.ndarray) -> np.ndarray:
    m = Z.shape[0]
    out = np.zeros(m, dtype=np.complex128)
    for t in range(pows.shape[0]):
        term = np.full(m, coeffs[t])
        for j in range(pows.shape[1]):
            p = pows[t, j]
            if p:
                term = term * Z[:, j] ** p
        out += term
    return out


def poly_grad_numpy(pows: np.ndarray, coeffs: np.ndarray, Z: np.ndarray) -> np.ndarray:
    m, n = Z.shape
    out = np.zeros((m, n), dtype=np.complex128)
    for t in range(pows.shape[0]):
        for j in range(n):
            pj = pows[t, j]
            if pj == 0:
                continue
            term = np.full(m, coeffs[t] * pj)
            for k in range(n):
                p = pows[t, k] - (1 if k == j else 0)
                if p:
                    term = term * Z[:, k] ** p
            out[:, j] += term
    return out


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _poly_eval_njit(pows, coeffs, Z):  # pragma: no cover - compiled
        m, n = Z.shape
        out = np.zeros(m, dtype=np.complex128)
        for i in range(m):
            acc = 0.0 + 0.0j
            for t in range(pows.shape[0]):
                term = coeffs[t]
                for j in range(n):
                    p = pows[t, j]
                    if p:
                        term = term * Z[i, j] ** p
                acc += term
            out[i] = acc
        return out

    @numba.njit(cache=True)
    def _poly_grad_njit(pows, coeffs, Z):  # pragma: no cover - compiled
        m, n = Z.shape
        out = np.zeros((m, n), dtype=np.complex128)
        for i in range(m):
            for t in range(pows.shape[0]):
                for j in range(n):
                    pj = pows[t, j]
                    if pj == 0:
                        continue
                    term = coeffs[t] * pj
                    for k in range(n):
                        p = pows[t, k]
                        if k == j:
                            p -= 1
                        if p:
                            term = term * Z[i, k] ** p
                    out[i, j] += term
        return out

    poly_eval_numba = _poly_eval_njit
    poly_grad_numba = _poly_grad_njit
else:  # pragma: no cover
    poly_eval_numba = None
    poly_grad_numba = None


# The numpy kernels amortize their per-call array overhead over large point
# batches, while the compiled loops win on the small and single-point calls
# issued by the refinement stages; break-even sits near 40 points.
_CROSSOVER = 40

if USE_NUMBA:

    def poly_eval(pows: np.ndarray, coeffs: np.ndarray, Z: np.ndarray) -> np.ndarray:
        if Z.shape[0] <= _CROSSOVER:
            return poly_eval_numba(pows, coeffs, Z)
        return poly_eval_numpy(pows, coeffs, Z)

    def poly_grad(pows: np.ndarray, coeffs: np.ndarray, Z: np.ndarray) -> np.ndarray:
        if Z.shape[0] <= _CROSSOVER:
            return poly_grad_numba(pows, coeffs, Z)
        return poly_grad_numpy(pows, coeffs, Z)

else:
    poly_eval = poly_eval_numpy
    poly_grad = poly_grad_numpy


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
