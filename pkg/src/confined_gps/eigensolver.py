"""Dense symmetric eigensolver and the labelled spectrum type.

The default method is Householder tridiagonalization followed by
implicitly shifted QL, both running in the kernel backend selected in
``confined_gps.kernels``. ``method="lapack"`` delegates to numpy instead.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import ConvergenceError

SYMMETRY_TOL = 1e-12
QL_MAX_ITER = 60


def eigen_symmetric(matrix, vectors=False, method="householder-ql", backend=None):
    """Eigenvalues (ascending) and optionally orthonormal eigenvectors.

    Returns ``(values, vecs)``; ``vecs`` is ``None`` when not requested,
    otherwise column ``i`` belongs to ``values[i]``. Ties keep the order in
    which the solver produced them.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    scale = np.max(np.abs(a)) if a.size else 0.0
    if np.max(np.abs(a - a.T), initial=0.0) > SYMMETRY_TOL * max(scale, 1.0):
        raise ValueError("matrix is not symmetric")
    if a.shape[0] == 0:
        return np.zeros(0), (np.zeros((0, 0)) if vectors else None)

    if method == "lapack":
        if vectors:
            values, vecs = np.linalg.eigh(a)
        else:
            values, vecs = np.linalg.eigvalsh(a), None
    elif method == "householder-ql":
        impl = kernels if backend is None else kernels.load_backend(backend)
        d, e, q = impl.tridiagonalize(a, vectors)
        values, vecs, ok = impl.tql_implicit(d, e, q, QL_MAX_ITER)
        if not ok:
            raise ConvergenceError("QL iteration did not converge")
    else:
        raise ValueError(f"unknown eigensolver method {method!r}")

    order = np.argsort(values, kind="stable")
    values = np.ascontiguousarray(values[order])
    if vecs is not None:
        vecs = np.ascontiguousarray(vecs[:, order])
    return values, vecs


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues at fixed ell; the i-th value is labelled (n=i, ell)."""

    energies: np.ndarray
    ell: int
    vectors: np.ndarray | None = None
    source: dict = field(default_factory=dict)

    @property
    def labels(self):
        return [(n, self.ell) for n in range(len(self.energies))]

    def energy(self, n):
        return float(self.energies[n])

    def __len__(self):
        return len(self.energies)


def _fix_signs(vecs):
    # first component above 1e-8 of the column maximum is made positive
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        big = np.abs(col) > 1e-8 * np.max(np.abs(col))
        if col[np.argmax(big)] < 0:
            vecs[:, j] = -col
    return vecs


def solve_spectrum(h, vectors=False, method="householder-ql", source=None):
    values, vecs = eigen_symmetric(h.matrix, vectors=vectors, method=method)
    if vecs is not None:
        vecs = _fix_signs(vecs)
    return Spectrum(values, h.ell, vecs, dict(source or {}))
