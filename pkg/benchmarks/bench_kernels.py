"""Benchmark the numba and numpy Pauli-kernel backends.

Run as:  python benchmarks/bench_kernels.py

The backend is frozen at import time, so each backend runs in a fresh
subprocess with FTHUB_BACKEND set accordingly.
"""

import json
import os
import subprocess
import sys
import textwrap

WORK = textwrap.dedent("""
    import json
    import time
    import numpy as np
    from fthub import kernels
    from fthub.lattice import single_hexagon, ring_lattice
    from fthub.oracle import jw_hopping, jw_onsite, jw_neighbor, exact_spectral_norm

    hexa = single_hexagon()
    h_h = jw_hopping(hexa, 1.0)
    h_c = jw_onsite(hexa, 4.0) + jw_neighbor(hexa, 2.0)
    nested = h_c.commutator(h_h).commutator(h_c)

    rng = np.random.default_rng(0)
    v = rng.standard_normal(4096) + 1j * rng.standard_normal(4096)
    nested.matvec(v)  # warm-up / jit compile

    reps = 50
    t0 = time.perf_counter()
    for _ in range(reps):
        nested.matvec(v)
    matvec_ms = (time.perf_counter() - t0) / reps * 1e3

    t0 = time.perf_counter()
    dense = nested.to_dense()
    dense_s = time.perf_counter() - t0

    t0 = time.perf_counter()
    norm = exact_spectral_norm(nested)
    norm_s = time.perf_counter() - t0

    print(json.dumps({
        "backend": kernels.ACTIVE_BACKEND,
        "n_strings": nested.n_terms,
        "matvec_ms": round(matvec_ms, 3),
        "dense_build_s": round(dense_s, 3),
        "spectral_norm_s": round(norm_s, 3),
        "spectral_norm": norm,
    }))
""")


def run(backend: str) -> dict:
    env = dict(os.environ, FTHUB_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", WORK], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    results = []
    for backend in ("numpy", "numba"):
        try:
            results.append(run(backend))
        except subprocess.CalledProcessError as exc:
            print(f"{backend} backend failed:\n{exc.stderr}", file=sys.stderr)
    for r in results:
        print(f"{r['backend']:>6}: matvec {r['matvec_ms']:8.3f} ms | "
              f"dense build {r['dense_build_s']:7.3f} s | "
              f"norm {r['spectral_norm_s']:7.3f} s "
              f"({r['n_strings']} strings, 12 qubits)")
    if len(results) == 2:
        a, b = results
        if a["spectral_norm"] and b["spectral_norm"]:
            rel = abs(a["spectral_norm"] - b["spectral_norm"]) / a["spectral_norm"]
            print(f"backend agreement on spectral norm: rel diff {rel:.2e}")
        print(f"numba speedup on matvec: {a['matvec_ms'] / b['matvec_ms']:.1f}x")


if __name__ == "__main__":
    main()
