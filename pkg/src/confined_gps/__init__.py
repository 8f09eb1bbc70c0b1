"""Generalized pseudospectral solver for confined radial Schrodinger problems."""

from .analytic import davidson_energy, free_hydrogen_energy, free_iho_energy, iho_nodes
from .coordinate_map import AlgebraicMap, LinearMap, build_mapped_grid, select_map
from .degeneracy import (
    ConfinementSpec,
    FiniteBarrier,
    Impenetrable,
    Numerics,
    barrier_suite,
    confined_energies,
    confined_spectrum,
    davidson_pair_suite,
    delta_e_scan,
    frequency_doubling_suite,
    incidental_degeneracy_suite,
)
from .eigensolver import Spectrum, eigen_symmetric, solve_spectrum
from .errors import ConvergenceError
from .hamiltonian import assemble
from .kernels import BACKEND
from .potentials import Barrier, Coulomb, Davidson, Harmonic, PotentialSpec
from .spectral_basis import build_lobatto_grid

__version__ = "0.1.0"
