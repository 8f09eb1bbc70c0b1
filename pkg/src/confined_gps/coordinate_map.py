"""Maps from the reference interval [-1, 1] to the radial domain.

Two maps are provided: the algebraic map, which packs collocation points
towards r = 0 and reaches ``r_max`` at x = 1, and an affine map onto a
finite shell [r_inner, r_outer].
"""

import math
from dataclasses import dataclass

import numpy as np

from .spectral_basis import LobattoGrid, build_lobatto_grid

DEFAULT_ORDER = 300
DEFAULT_ALPHA = 25.0
DEFAULT_R_MAX = 200.0


def map_algebraic(x, alpha, r_max):
    """r(x) = L (1 + x) / (1 - x + alpha) with L = alpha * r_max / 2.

    Returns ``(r, dr/dx)``; works elementwise on arrays.
    """
    if alpha <= 0 or r_max <= 0:
        raise ValueError("alpha and r_max must be positive")
    length = alpha * r_max / 2.0
    denom = 1.0 - np.asarray(x, dtype=float) + alpha
    r = length * (1.0 + np.asarray(x, dtype=float)) / denom
    dr = length * (2.0 + alpha) / denom**2
    return r, dr


def map_linear(x, r_inner, r_outer):
    """Affine map of [-1, 1] onto [r_inner, r_outer]."""
    if not 0.0 <= r_inner < r_outer < math.inf:
        raise ValueError("need 0 <= r_inner < r_outer < inf")
    half = (r_outer - r_inner) / 2.0
    x = np.asarray(x, dtype=float)
    return r_inner + half * (1.0 + x), np.full_like(x, half)


@dataclass(frozen=True)
class AlgebraicMap:
    alpha: float = DEFAULT_ALPHA
    r_max: float = DEFAULT_R_MAX

    def __post_init__(self):
        if not (self.alpha > 0 and self.r_max > 0 and math.isfinite(self.r_max)):
            raise ValueError("algebraic map needs alpha > 0 and finite r_max > 0")

    @property
    def length(self):
        return self.alpha * self.r_max / 2.0

    @property
    def r_inner(self):
        return 0.0

    @property
    def r_outer(self):
        return self.r_max

    def __call__(self, x):
        return map_algebraic(x, self.alpha, self.r_max)


@dataclass(frozen=True)
class LinearMap:
    r_inner: float
    r_outer: float

    def __post_init__(self):
        if not 0.0 <= self.r_inner < self.r_outer < math.inf:
            raise ValueError("linear map needs 0 <= r_inner < r_outer < inf")

    def __call__(self, x):
        return map_linear(x, self.r_inner, self.r_outer)


@dataclass(frozen=True, eq=False)
class MappedGrid:
    """Lobatto grid carried to physical radii by a coordinate map."""

    lobatto: LobattoGrid
    map: AlgebraicMap | LinearMap
    radii: np.ndarray
    map_deriv: np.ndarray

    @property
    def order(self):
        return self.lobatto.order

    @property
    def weights(self):
        return self.lobatto.weights

    @property
    def interior_radii(self):
        return self.radii[1:-1]


def build_mapped_grid(map_spec, order=DEFAULT_ORDER):
    lobatto = build_lobatto_grid(order)
    radii, deriv = map_spec(lobatto.nodes)
    if isinstance(map_spec, AlgebraicMap):
        radii[0] = 0.0
        radii[-1] = map_spec.r_max
    else:
        radii[0] = map_spec.r_inner
        radii[-1] = map_spec.r_outer
    radii.setflags(write=False)
    deriv.setflags(write=False)
    return MappedGrid(lobatto, map_spec, radii, deriv)


def select_map(r_inner, r_outer, alpha=DEFAULT_ALPHA):
    """Algebraic map for balls [0, R], linear map for shells [R_a, R_b]."""
    if r_inner == 0.0:
        return AlgebraicMap(alpha=alpha, r_max=r_outer)
    return LinearMap(r_inner, r_outer)


def alpha_through(radius, order=DEFAULT_ORDER, r_max=DEFAULT_R_MAX, alpha_hint=DEFAULT_ALPHA):
    """Algebraic-map alpha that puts a collocation point exactly at ``radius``.

    Each interior node x_j gives alpha = radius (1 - x_j) / (r_max (1 + x_j) / 2 - radius);
    of the admissible ones, the value closest to ``alpha_hint`` (in log scale)
    is returned.
    """
    if not 0.0 < radius < r_max:
        raise ValueError("radius must lie inside (0, r_max)")
    x = build_lobatto_grid(order).nodes[1:-1]
    denom = r_max * (1.0 + x) / 2.0 - radius
    ok = denom > 0
    alphas = radius * (1.0 - x[ok]) / denom[ok]
    return float(alphas[np.argmin(np.abs(np.log(alphas / alpha_hint)))])
