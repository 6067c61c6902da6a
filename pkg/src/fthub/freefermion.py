"""Norms of free-fermion (quadratic, number-conserving) operators.

The many-body spectral norm of a hopping Hamiltonian encoded by a symmetric
coupling matrix Q equals half the Schatten-1 norm of Q, and the same
reduction applies to (nested) commutators of such operators.  This turns
all hopping-sector norm evaluations into N x N eigenvalue problems.

Spin convention: ``sectors=1`` returns the single-spin-sector value
(1/2 Schatten norm); ``sectors=2`` doubles it for the spinful operator with
identical up/down coupling blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import LatticeGraph


@dataclass(frozen=True, eq=False)
class CouplingMatrix:
    """Symmetric single-particle coupling block with a hopping energy scale."""
    matrix: np.ndarray
    scale: float = 1.0

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("coupling matrix must be square")
        if not np.allclose(m, m.T, atol=1e-12):
            raise ValueError("coupling matrix must be symmetric")


def schatten1(matrix: np.ndarray, check_symmetry: bool = True) -> float:
    """Sum of absolute eigenvalues of a real symmetric matrix."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("schatten1 needs a square matrix")
    if not np.isfinite(m).all():
        raise ValueError("schatten1 needs finite entries")
    if check_symmetry and not np.allclose(m, m.T, atol=1e-12):
        raise ValueError("schatten1 needs a symmetric matrix")
    return float(np.abs(np.linalg.eigvalsh(m)).sum())


def ff_norm(coupling: np.ndarray | CouplingMatrix, tau: float = 1.0,
            sectors: int = 2) -> float:
    """Operator norm of the hopping Hamiltonian with the given coupling.

    ``sectors=2`` gives tau * |R|_1 for identical spin blocks; ``sectors=1``
    gives half of that.
    """
    if isinstance(coupling, CouplingMatrix):
        tau = tau * coupling.scale
        coupling = coupling.matrix
    if sectors not in (1, 2):
        raise ValueError("sectors must be 1 or 2")
    return tau * schatten1(coupling) * sectors / 2.0


def star_matrix(lattice: LatticeGraph, i: int, exclude: int | None = None,
                tau: float = 1.0) -> CouplingMatrix:
    """N x N coupling whose only nonzero block is the hopping star at site i.

    With ``exclude`` given (must be a neighbor of i), the bond i-exclude is
    dropped, leaving the (k-1)-edge star used by the neighbor-interaction
    commutator bound.
    """
    n = lattice.n_sites
    if not 0 <= i < n:
        raise ValueError(f"site {i} out of range")
    nbrs = lattice.neighbors(i)
    if exclude is not None:
        if exclude not in nbrs:
            raise ValueError(f"exclude={exclude} is not a neighbor of {i}")
        nbrs = [j for j in nbrs if j != exclude]
    mat = np.zeros((n, n))
    for j in nbrs:
        mat[i, j] = mat[j, i] = 1
    return CouplingMatrix(mat, tau)


def _as_matrix_scale(x) -> tuple:
    if isinstance(x, CouplingMatrix):
        return np.asarray(x.matrix, dtype=float), x.scale
    return np.asarray(x, dtype=float), 1.0


def ff_comm_norm(a, b, sectors: int = 1) -> float:
    """Norm of the commutator of two free-fermion operators.

    Per sector this is 1/2 |[A, B]|_1 times the product of the energy
    scales; the commutator of symmetric matrices is antisymmetric, so the
    Schatten norm is taken over its (imaginary) spectrum via A -> i*A.
    """
    ma, sa = _as_matrix_scale(a)
    mb, sb = _as_matrix_scale(b)
    if ma.shape != mb.shape:
        raise ValueError("coupling matrices must have matching dimensions")
    comm = ma @ mb - mb @ ma
    # i*[A,B] is Hermitian; its eigenvalues are the singular values up to sign
    sv = np.abs(np.linalg.eigvalsh(1j * comm))
    if sectors not in (1, 2):
        raise ValueError("sectors must be 1 or 2")
    return float(sv.sum()) * sa * sb * sectors / 2.0


def ff_nested_comm_norm(a, b, c, sectors: int = 1) -> float:
    """Norm of [[A, B], C] for free-fermion operators (per-sector by default)."""
    ma, sa = _as_matrix_scale(a)
    mb, sb = _as_matrix_scale(b)
    mc, sc = _as_matrix_scale(c)
    if not (ma.shape == mb.shape == mc.shape):
        raise ValueError("coupling matrices must have matching dimensions")
    inner = ma @ mb - mb @ ma
    nested = inner @ mc - mc @ inner
    if sectors not in (1, 2):
        raise ValueError("sectors must be 1 or 2")
    return schatten1(nested) * sa * sb * sc * sectors / 2.0
