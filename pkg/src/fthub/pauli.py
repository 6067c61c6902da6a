"""Sparse Pauli-string algebra for qubit operators on up to 16 qubits.

A string is stored as (xmask, zmask) -> coefficient, representing
``coeff * X^xmask Z^zmask`` (Z applied first).  Y_q is ``i X_q Z_q``, so any
Pauli word fits this form with a complex coefficient.  Products, sums and
commutators stay in this representation; matrices and matvecs are produced
on demand through :mod:`fthub.kernels`.
"""

from __future__ import annotations

import numpy as np

from . import kernels

_TOL = 1e-14


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


class PauliSum:
    """A complex linear combination of Pauli strings on ``n_qubits`` qubits."""

    __slots__ = ("n_qubits", "terms")

    def __init__(self, n_qubits: int, terms: dict | None = None):
        if n_qubits > 16:
            raise ValueError("qubit count capped at 16 for the exact layer")
        self.n_qubits = n_qubits
        self.terms = {} if terms is None else terms

    # -- construction helpers ------------------------------------------------
    @classmethod
    def zero(cls, n_qubits: int) -> "PauliSum":
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits: int, coeff: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, {(0, 0): coeff})

    @classmethod
    def z(cls, n_qubits: int, q: int, coeff: complex = 1.0) -> "PauliSum":
        return cls(n_qubits, {(0, 1 << q): coeff})

    @classmethod
    def from_word(cls, n_qubits: int, word: dict, coeff: complex = 1.0) -> "PauliSum":
        """word maps qubit -> 'X' | 'Y' | 'Z'."""
        x = z = 0
        phase = 1.0 + 0j
        for q, p in word.items():
            if p == "X":
                x |= 1 << q
            elif p == "Z":
                z |= 1 << q
            elif p == "Y":
                x |= 1 << q
                z |= 1 << q
                phase *= 1j
            else:
                raise ValueError(f"bad Pauli letter {p!r}")
        return cls(n_qubits, {(x, z): coeff * phase})

    def copy(self) -> "PauliSum":
        return PauliSum(self.n_qubits, dict(self.terms))

    # -- algebra ---------------------------------------------------------------
    def _iadd_term(self, key, coeff):
        c = self.terms.get(key, 0.0) + coeff
        if abs(c) <= _TOL:
            self.terms.pop(key, None)
        else:
            self.terms[key] = c

    def __add__(self, other: "PauliSum") -> "PauliSum":
        out = self.copy()
        for key, c in other.terms.items():
            out._iadd_term(key, c)
        return out

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        out = self.copy()
        for key, c in other.terms.items():
            out._iadd_term(key, -c)
        return out

    def __mul__(self, scalar: complex) -> "PauliSum":
        if abs(scalar) == 0:
            return PauliSum(self.n_qubits)
        return PauliSum(self.n_qubits, {k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "PauliSum") -> "PauliSum":
        """Operator product.  (X^a Z^b)(X^c Z^d) = (-1)^(b.c) X^(a^c) Z^(b^d)."""
        out = PauliSum(self.n_qubits)
        for (x1, z1), c1 in self.terms.items():
            for (x2, z2), c2 in other.terms.items():
                sign = -1.0 if _parity(z1 & x2) else 1.0
                out._iadd_term((x1 ^ x2, z1 ^ z2), sign * c1 * c2)
        return out

    def commutator(self, other: "PauliSum") -> "PauliSum":
        return (self @ other) - (other @ self)

    def anticommutator(self, other: "PauliSum") -> "PauliSum":
        return (self @ other) + (other @ self)

    def dagger(self) -> "PauliSum":
        out = PauliSum(self.n_qubits)
        for (x, z), c in self.terms.items():
            sign = -1.0 if _parity(x & z) else 1.0
            out._iadd_term((x, z), sign * np.conj(c))
        return out

    # -- queries -----------------------------------------------------------------
    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def is_zero(self, tol: float = 1e-12) -> bool:
        return all(abs(c) <= tol for c in self.terms.values())

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return (self - self.dagger()).is_zero(tol)

    # -- numeric backends ----------------------------------------------------------
    def _arrays(self):
        n = len(self.terms)
        coeffs = np.empty(n, dtype=np.complex128)
        xm = np.empty(n, dtype=np.int64)
        zm = np.empty(n, dtype=np.int64)
        for i, ((x, z), c) in enumerate(sorted(self.terms.items())):
            coeffs[i], xm[i], zm[i] = c, x, z
        return coeffs, xm, zm

    def matvec(self, vec: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
        coeffs, xm, zm = self._arrays()
        return kernels.apply_pauli_sum(coeffs, xm, zm, np.ascontiguousarray(vec), out)

    def to_dense(self) -> np.ndarray:
        coeffs, xm, zm = self._arrays()
        return kernels.pauli_sum_dense(coeffs, xm, zm, self.n_qubits)
