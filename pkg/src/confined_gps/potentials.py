"""Central potentials, centrifugal term included.

A potential is a core term (harmonic, Coulomb or Davidson) plus an optional
finite barrier. Energies and lengths are in atomic units.
"""

from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class Harmonic:
    k: float = 1.0

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError("force constant must be positive")


@dataclass(frozen=True)
class Coulomb:
    Z: float = 1.0

    def __post_init__(self):
        if not self.Z > 0:
            raise ValueError("nuclear charge must be positive")


@dataclass(frozen=True)
class Davidson:
    """Harmonic well plus a repulsive lam / (2 r^2) term."""

    k: float = 1.0
    lam: float = 0.0

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError("force constant must be positive")
        if not self.lam >= 0:
            raise ValueError("lambda must be non-negative")


@dataclass(frozen=True)
class Barrier:
    """Finite wall of height ``height`` starting at ``radius``.

    With ``mode="plateau"`` the potential is the constant ``height`` for
    r >= radius (the core term is switched off there). With ``mode="step"``
    the height is added on top of the core term.
    """

    radius: float
    height: float
    mode: str = "plateau"

    def __post_init__(self):
        if not (self.radius > 0 and self.height > 0):
            raise ValueError("barrier radius and height must be positive")
        if self.mode not in ("plateau", "step"):
            raise ValueError(f"unknown barrier mode {self.mode!r}")


@dataclass(frozen=True)
class PotentialSpec:
    core: Harmonic | Coulomb | Davidson
    barrier: Barrier | None = None

    @property
    def oscillator_unit(self):
        """hbar * omega in hartree for oscillator cores, 1 for Coulomb."""
        if isinstance(self.core, Coulomb):
            return 1.0
        return float(np.sqrt(self.core.k))


def _core_energy(core, ell, r):
    centrifugal = ell * (ell + 1) / (2.0 * r * r)
    if isinstance(core, Harmonic):
        return core.k * r * r / 2.0 + centrifugal
    if isinstance(core, Davidson):
        return core.k * r * r / 2.0 + centrifugal + core.lam / (2.0 * r * r)
    if isinstance(core, Coulomb):
        return -core.Z / r + centrifugal
    raise TypeError(f"unsupported core potential {core!r}")


def evaluate(spec, ell, r):
    """Potential energy V_ell(r); ``r`` may be a scalar or an array, all > 0."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0):
        raise ValueError("potential is only defined for r > 0")
    v = _core_energy(spec.core, ell, r_arr)
    b = spec.barrier
    if b is not None:
        inside = r_arr >= b.radius
        if b.mode == "plateau":
            v = np.where(inside, b.height, v)
        else:
            v = v + np.where(inside, b.height, 0.0)
    if np.ndim(v) == 0:
        return float(v)
    return v


def snap_barrier(spec, radii):
    """Move the barrier radius onto the nearest of the given grid radii."""
    if spec.barrier is None:
        return spec
    radii = np.asarray(radii)
    nearest = float(radii[np.argmin(np.abs(radii - spec.barrier.radius))])
    return replace(spec, barrier=replace(spec.barrier, radius=nearest))
