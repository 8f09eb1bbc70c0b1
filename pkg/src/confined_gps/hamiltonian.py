"""Symmetric GPS Hamiltonian on the interior collocation points.

With psi(r(x)) = sqrt(r'(x)) f(x) and the cardinal basis
chi_j = g_j / sqrt(w_j r'_j), which is orthonormal under Lobatto quadrature,
the kinetic energy becomes

    T_ij = 1/2 * sum_k w_k D_ki D_kj / r'_k / sqrt(w_i r'_i w_j r'_j)

and the potential is diagonal. Deleting the two endpoint rows and columns
imposes psi = 0 at both ends of the radial domain.
"""

from dataclasses import dataclass

import numpy as np

from .potentials import evaluate

NORM_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class HamiltonianMatrix:
    matrix: np.ndarray
    kinetic: np.ndarray
    potential: np.ndarray
    grid: object
    ell: int

    @property
    def dim(self):
        return self.matrix.shape[0]


def kinetic_matrix(grid):
    dmat = grid.lobatto.deriv_matrix
    w = grid.weights
    rp = grid.map_deriv
    stiffness = (dmat.T * (w / rp)) @ dmat
    scale = np.sqrt(w * rp)
    t = 0.5 * stiffness / np.outer(scale, scale)
    t = t[1:-1, 1:-1]
    # the product is symmetric up to rounding; make it exactly so
    return 0.5 * (t + t.T)


def assemble(grid, spec, ell):
    r = grid.interior_radii
    if r[0] <= 0.0:
        raise ValueError("innermost interior radius must be positive")
    kin = kinetic_matrix(grid)
    pot = evaluate(spec, ell, r)
    h = kin + np.diag(pot)
    for arr in (h, kin, pot):
        arr.setflags(write=False)
    return HamiltonianMatrix(h, kin, pot, grid, ell)


def wavefunction_samples(h, eigvec):
    """Nodal values of the reduced radial function u(r) = r R(r).

    Returns ``(r, u, density)`` over all grid points, endpoints included
    (where u = 0). ``density`` is u^2, the radial probability density, so
    that sum_k w_k r'_k u_k^2 = 1.
    """
    c = np.asarray(eigvec, dtype=float)
    if c.shape != (h.dim,):
        raise ValueError("eigenvector length does not match the Hamiltonian")
    norm = float(c @ c)
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"eigenvector is not normalized (|c|^2 = {norm})")
    grid = h.grid
    scale = np.sqrt(grid.weights[1:-1] * grid.map_deriv[1:-1])
    u = np.zeros(grid.order + 1)
    u[1:-1] = c / scale
    return np.array(grid.radii), u, u * u


def sign_changes(u, rel_tol=1e-8):
    """Count sign changes of ``u``, ignoring entries below rel_tol * max|u|."""
    u = np.asarray(u)
    keep = u[np.abs(u) > rel_tol * np.max(np.abs(u))]
    return int(np.count_nonzero(np.diff(np.sign(keep)) != 0))
