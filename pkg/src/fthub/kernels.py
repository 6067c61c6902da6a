"""Low-level kernels for applying Pauli-string sums to state vectors.

Every many-body operator in the exact-verification layer is a sum of Pauli
strings, each encoded as a complex coefficient plus X/Z bit masks.  The hot
loops (matrix-free matvec, dense assembly) have two interchangeable
implementations: a numba-jitted one and a pure-numpy one.  Selection is
controlled by the ``FTHUB_BACKEND`` environment variable:

    FTHUB_BACKEND=auto    use numba when importable (default)
    FTHUB_BACKEND=numba   require numba, fail loudly if missing
    FTHUB_BACKEND=numpy   force the vectorized numpy path

``benchmarks/bench_kernels.py`` compares the two backends.
"""

from __future__ import annotations

import os

import numpy as np

# parity of the low 16 bits; qubit counts are capped at 16 so one lookup suffices
_PARITY16 = np.zeros(1 << 16, dtype=np.uint8)
for _b in range(16):
    _PARITY16[1 << _b:2 << _b] = _PARITY16[: 1 << _b] ^ 1

_BACKEND_ENV = "FTHUB_BACKEND"


def requested_backend() -> str:
    return os.environ.get(_BACKEND_ENV, "auto").lower()


def _load_numba():
    try:
        import numba
    except ImportError:
        return None
    return numba


def _numpy_apply(coeffs, xmasks, zmasks, vec, out):
    dim = vec.shape[0]
    idx = np.arange(dim)
    for c, x, z in zip(coeffs, xmasks, zmasks):
        sign = 1.0 - 2.0 * _PARITY16[idx & z].astype(np.float64)
        np.add.at(out, idx ^ x, c * sign * vec)
    return out


def _numpy_apply_fast(coeffs, xmasks, zmasks, vec, out):
    # idx ^ x is a bijection, so plain fancy-index assignment accumulates safely
    dim = vec.shape[0]
    idx = np.arange(dim)
    for c, x, z in zip(coeffs, xmasks, zmasks):
        sign = 1.0 - 2.0 * _PARITY16[idx & z].astype(np.float64)
        out[idx ^ x] += c * sign * vec
    return out


def _numpy_dense(coeffs, xmasks, zmasks, n_qubits):
    dim = 1 << n_qubits
    mat = np.zeros((dim, dim), dtype=np.complex128)
    idx = np.arange(dim)
    for c, x, z in zip(coeffs, xmasks, zmasks):
        sign = 1.0 - 2.0 * _PARITY16[idx & z].astype(np.float64)
        mat[idx ^ x, idx] += c * sign
    return mat


def _build_numba_kernels():
    numba = _load_numba()
    if numba is None:
        return None
    njit = numba.njit

    @njit(cache=True)
    def apply_kernel(coeffs, xmasks, zmasks, vec, out, parity):  # pragma: no cover
        dim = vec.shape[0]
        for k in range(coeffs.shape[0]):
            c = coeffs[k]
            x = xmasks[k]
            z = zmasks[k]
            for i in range(dim):
                s = 1.0 - 2.0 * parity[i & z]
                out[i ^ x] += c * s * vec[i]
        return out

    @njit(cache=True)
    def dense_kernel(coeffs, xmasks, zmasks, mat, parity):  # pragma: no cover
        dim = mat.shape[0]
        for k in range(coeffs.shape[0]):
            c = coeffs[k]
            x = xmasks[k]
            z = zmasks[k]
            for i in range(dim):
                s = 1.0 - 2.0 * parity[i & z]
                mat[i ^ x, i] += c * s
        return mat

    def apply(coeffs, xmasks, zmasks, vec, out):
        return apply_kernel(coeffs, xmasks, zmasks, vec, out, _PARITY16)

    def dense(coeffs, xmasks, zmasks, n_qubits):
        dim = 1 << n_qubits
        mat = np.zeros((dim, dim), dtype=np.complex128)
        return dense_kernel(coeffs, xmasks, zmasks, mat, _PARITY16)

    return apply, dense


def _select():
    mode = requested_backend()
    if mode not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown {_BACKEND_ENV} value: {mode!r}")
    if mode in ("auto", "numba"):
        kernels = _build_numba_kernels()
        if kernels is not None:
            return "numba", kernels[0], kernels[1]
        if mode == "numba":
            raise ImportError("FTHUB_BACKEND=numba but numba is not importable")
    return "numpy", _numpy_apply_fast, _numpy_dense


ACTIVE_BACKEND, _apply_impl, _dense_impl = _select()


def apply_pauli_sum(coeffs: np.ndarray, xmasks: np.ndarray, zmasks: np.ndarray,
                    vec: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
    """out += sum_k coeffs[k] * X^xmasks[k] Z^zmasks[k] |vec>."""
    if out is None:
        out = np.zeros_like(vec)
    return _apply_impl(coeffs, xmasks, zmasks, vec, out)


def pauli_sum_dense(coeffs: np.ndarray, xmasks: np.ndarray, zmasks: np.ndarray,
                    n_qubits: int) -> np.ndarray:
    """Dense 2^n x 2^n matrix of the Pauli-string sum."""
    return _dense_impl(coeffs, xmasks, zmasks, n_qubits)


def backends_available() -> dict:
    return {"active": ACTIVE_BACKEND, "numba": _load_numba() is not None}
