"""Time the compiled kernels against the numpy fallback (and LAPACK).

    python3 benchmarks/bench_kernels.py --order 300 --repeat 5

The test matrix is the harmonic-oscillator Hamiltonian on the default grid,
so the timings are those of a real solve.
"""

import argparse
import time

import numpy as np

from confined_gps import kernels
from confined_gps.coordinate_map import AlgebraicMap, build_mapped_grid
from confined_gps.eigensolver import eigen_symmetric
from confined_gps.hamiltonian import assemble
from confined_gps.potentials import Harmonic, PotentialSpec
from confined_gps.spectral_basis import _lobatto_nodes


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    grid = build_mapped_grid(AlgebraicMap(), args.order)
    h = assemble(grid, PotentialSpec(Harmonic()), 0).matrix
    nodes = grid.lobatto.nodes
    print(f"order N = {args.order}, matrix dim = {h.shape[0]}, default backend = {kernels.BACKEND}")

    ref = np.linalg.eigvalsh(h)
    rows = []
    for name in kernels.available_backends():
        impl = kernels.load_backend(name)
        p_nodes, _ = impl.legendre_pair(args.order, nodes)
        cases = {
            "legendre_pair": lambda: impl.legendre_pair(args.order, nodes),
            "deriv_matrix": lambda: impl.lobatto_deriv_matrix(nodes, p_nodes),
            "eig values": lambda: eigen_symmetric(h, False, backend=name),
            "eig vectors": lambda: eigen_symmetric(h, True, backend=name),
        }
        for case, fn in cases.items():
            t, out = best_of(fn, args.repeat)
            err = ""
            if case.startswith("eig"):
                err = f"{np.max(np.abs(out[0][:10] - ref[:10])):.1e}"
            rows.append((name, case, t, err))
    for case, fn in {
        "eig values": lambda: eigen_symmetric(h, False, method="lapack"),
        "eig vectors": lambda: eigen_symmetric(h, True, method="lapack"),
    }.items():
        t, _ = best_of(fn, args.repeat)
        rows.append(("lapack", case, t, ""))
    # node search uses whatever backend was selected at import
    t, _ = best_of(lambda: _lobatto_nodes(args.order), args.repeat)
    rows.append((kernels.BACKEND, "lobatto nodes", t, ""))

    print(f"{'backend':<10}{'kernel':<16}{'seconds':>12}  max|dE| low 10 vs LAPACK")
    for name, case, t, err in rows:
        print(f"{name:<10}{case:<16}{t:>12.5f}  {err}")
    timing = {(n, c): t for n, c, t, _ in rows}
    if ("compiled", "eig vectors") in timing:
        for case in ("eig values", "eig vectors"):
            speedup = timing[("python", case)] / timing[("compiled", case)]
            print(f"speedup compiled/python, {case}: {speedup:.1f}x")


if __name__ == "__main__":
    main()
