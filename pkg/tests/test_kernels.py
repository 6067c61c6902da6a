import os
import subprocess
import sys

import numpy as np
import pytest

from fthub import kernels


def _random_strings(n_qubits, n_terms, seed):
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(n_terms) + 1j * rng.standard_normal(n_terms)
    xm = rng.integers(0, 1 << n_qubits, n_terms).astype(np.int64)
    zm = rng.integers(0, 1 << n_qubits, n_terms).astype(np.int64)
    return coeffs, xm, zm


class TestBackendEquivalence:
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_apply_matches_reference(self, seed):
        coeffs, xm, zm = _random_strings(6, 12, seed)
        v = (np.random.default_rng(seed + 9).standard_normal(64)
             + 1j * np.random.default_rng(seed + 10).standard_normal(64))
        active = kernels.apply_pauli_sum(coeffs, xm, zm, v)
        reference = kernels._numpy_apply(coeffs, xm, zm, v, np.zeros_like(v))
        assert np.abs(active - reference).max() < 1e-13

    @pytest.mark.parametrize("seed", [3, 4])
    def test_dense_matches_apply_on_basis(self, seed):
        coeffs, xm, zm = _random_strings(4, 8, seed)
        mat = kernels.pauli_sum_dense(coeffs, xm, zm, 4)
        for col in range(16):
            basis = np.zeros(16, dtype=complex)
            basis[col] = 1.0
            assert np.abs(mat[:, col]
                          - kernels.apply_pauli_sum(coeffs, xm, zm, basis)).max() < 1e-13

    def test_numpy_fast_matches_add_at(self):
        coeffs, xm, zm = _random_strings(5, 10, 7)
        v = np.random.default_rng(8).standard_normal(32) + 0j
        fast = kernels._numpy_apply_fast(coeffs, xm, zm, v, np.zeros_like(v))
        slow = kernels._numpy_apply(coeffs, xm, zm, v, np.zeros_like(v))
        assert np.abs(fast - slow).max() < 1e-13


class TestEnvSelection:
    def _probe(self, backend):
        env = dict(os.environ, FTHUB_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, "-c",
             "from fthub.kernels import ACTIVE_BACKEND; print(ACTIVE_BACKEND)"],
            env=env, capture_output=True, text=True)
        return out

    def test_numpy_forced(self):
        out = self._probe("numpy")
        assert out.stdout.strip() == "numpy"

    def test_auto_prefers_numba_when_available(self):
        out = self._probe("auto")
        expected = "numba" if kernels._load_numba() else "numpy"
        assert out.stdout.strip() == expected

    def test_bad_value_rejected(self):
        out = self._probe("cuda")
        assert out.returncode != 0


class TestParityTable:
    def test_parity_values(self):
        for x in (0, 1, 3, 0b1011, 0xFFFF):
            assert kernels._PARITY16[x] == bin(x).count("1") % 2
