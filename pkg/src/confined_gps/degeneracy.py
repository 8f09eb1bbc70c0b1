"""Confined-state solves and the degeneracy studies built on them.

Everything here runs on a fresh grid per confinement geometry; each solve
is an independent pure computation, so the suites simply loop over cells
in a fixed order.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import analytic
from .coordinate_map import (
    DEFAULT_ALPHA,
    DEFAULT_ORDER,
    DEFAULT_R_MAX,
    AlgebraicMap,
    build_mapped_grid,
    select_map,
)
from .eigensolver import solve_spectrum
from .hamiltonian import assemble
from .potentials import Barrier, Davidson, Harmonic, PotentialSpec, snap_barrier


@dataclass(frozen=True)
class Numerics:
    order: int = DEFAULT_ORDER
    alpha: float = DEFAULT_ALPHA
    r_max: float = DEFAULT_R_MAX

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be at least 2")
        if not (self.alpha > 0 and 0 < self.r_max < math.inf):
            raise ValueError("alpha and r_max must be positive and finite")


DEFAULT_NUMERICS = Numerics()


@dataclass(frozen=True)
class Impenetrable:
    pass


@dataclass(frozen=True)
class FiniteBarrier:
    height: float
    mode: str = "plateau"


@dataclass(frozen=True)
class ConfinementSpec:
    """Radial domain [r_inner, r_outer] and the kind of wall at r_outer.

    ``r_outer = inf`` stands for the unconfined problem and resolves to the
    numerical ``r_max``. With a finite barrier, ``r_outer`` is the barrier
    radius and the Dirichlet wall sits at ``r_max``.
    """

    r_inner: float = 0.0
    r_outer: float = math.inf
    wall: Impenetrable | FiniteBarrier = field(default_factory=Impenetrable)

    def __post_init__(self):
        if not 0.0 <= self.r_inner < self.r_outer:
            raise ValueError("need 0 <= r_inner < r_outer")
        if isinstance(self.wall, FiniteBarrier):
            if self.r_inner != 0.0:
                raise ValueError("a finite barrier requires r_inner = 0")
            if not math.isfinite(self.r_outer):
                raise ValueError("a finite barrier needs a finite radius")

    def outer_wall(self, numerics):
        if isinstance(self.wall, FiniteBarrier) or not math.isfinite(self.r_outer):
            return numerics.r_max
        return self.r_outer


def confined_spectrum(
    potential,
    ell,
    confinement=ConfinementSpec(),
    numerics=DEFAULT_NUMERICS,
    vectors=False,
):
    """Solve one (potential, ell, confinement) cell; energies in hartree."""
    r_outer = confinement.outer_wall(numerics)
    if confinement.r_inner >= r_outer:
        raise ValueError("inner radius lies beyond the outer wall")
    if isinstance(confinement.wall, FiniteBarrier):
        if confinement.r_outer >= numerics.r_max:
            raise ValueError("barrier radius must lie inside r_max")
        map_spec = AlgebraicMap(numerics.alpha, numerics.r_max)
        grid = build_mapped_grid(map_spec, numerics.order)
        wall = confinement.wall
        potential = PotentialSpec(
            potential.core, Barrier(confinement.r_outer, wall.height, wall.mode)
        )
        potential = snap_barrier(potential, grid.interior_radii)
    else:
        map_spec = select_map(confinement.r_inner, r_outer, numerics.alpha)
        grid = build_mapped_grid(map_spec, numerics.order)
    h = assemble(grid, potential, ell)
    source = {
        "potential": potential,
        "confinement": confinement,
        "numerics": numerics,
        "map": map_spec,
    }
    return solve_spectrum(h, vectors=vectors, source=source), h


def confined_energies(potential, ell, confinement=ConfinementSpec(), numerics=DEFAULT_NUMERICS):
    spectrum, _ = confined_spectrum(potential, ell, confinement, numerics)
    return spectrum.energies


def _oscillator_levels(k, ell, confinement, numerics, lam=0.0):
    core = Davidson(k=k, lam=lam) if lam else Harmonic(k=k)
    return confined_energies(PotentialSpec(core), ell, confinement, numerics) / math.sqrt(k)


# --- incidental degeneracy -------------------------------------------------


@dataclass(frozen=True)
class DegeneracyReport:
    confined_state: tuple
    confinement: ConfinementSpec
    confined_energy: float
    reference_state: tuple
    reference_energy: float

    @property
    def deviation(self):
        return abs(self.confined_energy - self.reference_energy)


def incidental_degeneracy_suite(ell, n_star, k=1.0, numerics=DEFAULT_NUMERICS):
    """Walls at each node of the free (n_star, ell) state.

    Confining to [0, rho_m] keeps m - 1 nodes, confining to [rho_m, inf)
    keeps n_star - m; both states should sit at the free (n_star, ell)
    energy. Energies in hbar*omega units.
    """
    if n_star < 1:
        raise ValueError("n_star must be at least 1")
    reference = analytic.free_iho_energy(n_star, ell)
    reports = []
    for m, rho in enumerate(analytic.iho_nodes(n_star, ell, k).nodes, start=1):
        for conf, n in (
            (ConfinementSpec(0.0, rho), m - 1),
            (ConfinementSpec(rho, math.inf), n_star - m),
        ):
            energy = _oscillator_levels(k, ell, conf, numerics)[n]
            reports.append(
                DegeneracyReport((n, ell), conf, float(energy), (n_star, ell), reference)
            )
    return reports


# --- Delta ell = 2 pairs ---------------------------------------------------


def first_node_radius(ell, k=1.0):
    """Single node of the free (1, ell) oscillator state."""
    return math.sqrt((2 * ell + 3) / 2.0) / k**0.25


@dataclass(frozen=True)
class PairRow:
    """Energies of the (n + 1, ell) and (n, ell + 2) states in one cavity."""

    n: int
    ell: int
    radius: float
    upper_state: tuple
    upper_energy: float
    lower_state: tuple
    lower_energy: float

    @property
    def delta(self):
        return self.upper_energy - self.lower_energy


def frequency_doubling_suite(ell, n_max, numerics=DEFAULT_NUMERICS, n_values=None, k=1.0):
    """Pairs [(n+1, ell), (n, ell+2)] confined at the (1, ell) node.

    ``n_values`` overrides the default range 0..n_max.
    """
    if n_values is None:
        if n_max < 1:
            raise ValueError("n_max must be at least 1")
        n_values = range(n_max + 1)
    n_values = sorted(n_values)
    radius = first_node_radius(ell, k)
    conf = ConfinementSpec(0.0, radius)
    same = _oscillator_levels(k, ell, conf, numerics)
    raised = _oscillator_levels(k, ell + 2, conf, numerics)
    if n_values[-1] + 1 >= len(same):
        raise ValueError("grid too small for the requested states")
    return [
        PairRow(n, ell, radius, (n + 1, ell), float(same[n + 1]), (n, ell + 2), float(raised[n]))
        for n in n_values
    ]


def delta_e(ell, n, radius, numerics=DEFAULT_NUMERICS, k=1.0):
    """E(n, ell+2) - E(n+1, ell) for a hard wall at ``radius`` (hbar*omega)."""
    conf = ConfinementSpec(0.0, radius)
    e_same = _oscillator_levels(k, ell, conf, numerics)[n + 1]
    e_raised = _oscillator_levels(k, ell + 2, conf, numerics)[n]
    return float(e_raised - e_same)


def delta_e_scan(ell, n, r_values, numerics=DEFAULT_NUMERICS, k=1.0):
    r_values = [float(r) for r in r_values]
    if any(r <= 0 for r in r_values) or any(b <= a for a, b in zip(r_values, r_values[1:])):
        raise ValueError("radii must be positive and ascending")
    return [(r, delta_e(ell, n, r, numerics, k)) for r in r_values]


def delta_e_crossing(ell, n, target=-2.0, bracket=(0.8, 2.0), tol=1e-9, numerics=DEFAULT_NUMERICS):
    """Radius where delta_e equals ``target``, by bisection on ``bracket``."""
    lo, hi = bracket
    f_lo = delta_e(ell, n, lo, numerics) - target
    f_hi = delta_e(ell, n, hi, numerics) - target
    if f_lo * f_hi > 0:
        raise ValueError("target not bracketed")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = delta_e(ell, n, mid, numerics) - target
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


# --- Davidson oscillator ---------------------------------------------------


@dataclass(frozen=True)
class DavidsonRow:
    n: int
    upper_energy: float  # E(n + 1, 0)
    lower_energy: float  # E(n, 2)
    delta: float
    delta_delta: float | None


@dataclass(frozen=True)
class DavidsonTable:
    lam: float
    radius: float
    ground_energy: float  # confined (0, 0)
    free_first_excited: float  # free (1, 0)
    rows: list

    @property
    def incidental_deviation(self):
        return abs(self.ground_energy - self.free_first_excited)


def davidson_pair_suite(lam, n_max, numerics=DEFAULT_NUMERICS):
    """Davidson oscillator (k = 1) confined at its free (1, 0) node.

    Rows run over pairs [(n+1, 0), (n, 2)] for n = 0 .. n_max - 1.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    radius = analytic.davidson_first_node(0, lam)
    conf = ConfinementSpec(0.0, radius)
    s_levels = _oscillator_levels(1.0, 0, conf, numerics, lam=lam)
    d_levels = _oscillator_levels(1.0, 2, conf, numerics, lam=lam)
    rows = []
    prev = None
    for n in range(n_max):
        delta = float(s_levels[n + 1] - d_levels[n])
        dd = None if prev is None else delta - prev
        rows.append(DavidsonRow(n, float(s_levels[n + 1]), float(d_levels[n]), delta, dd))
        prev = delta
    return DavidsonTable(
        lam, radius, float(s_levels[0]), analytic.davidson_energy(1, 0, lam), rows
    )


# --- finite barrier --------------------------------------------------------


@dataclass(frozen=True)
class BarrierRow:
    target_radius: float
    radius: float  # snapped onto the grid
    height: float
    n: int
    energy: float


def barrier_suite(r_c_targets, v_c_values, n_states, numerics=DEFAULT_NUMERICS, mode="plateau"):
    """Lowest ``n_states`` s-levels (hartree, k = 1) behind finite barriers."""
    if any(r <= 0 for r in r_c_targets) or any(v <= 0 for v in v_c_values):
        raise ValueError("barrier radii and heights must be positive")
    rows = []
    for target in r_c_targets:
        for height in v_c_values:
            conf = ConfinementSpec(0.0, target, FiniteBarrier(height, mode))
            spectrum, h = confined_spectrum(PotentialSpec(Harmonic()), 0, conf, numerics)
            radius = spectrum.source["potential"].barrier.radius
            for n in range(n_states):
                rows.append(BarrierRow(target, radius, height, n, spectrum.energy(n)))
    return rows


def nearest_grid_radius(target, numerics=DEFAULT_NUMERICS):
    grid = build_mapped_grid(AlgebraicMap(numerics.alpha, numerics.r_max), numerics.order)
    r = grid.interior_radii
    return float(r[np.argmin(np.abs(r - target))])
