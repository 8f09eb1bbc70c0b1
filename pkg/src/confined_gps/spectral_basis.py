"""Gauss-Lobatto-Legendre collocation grid on [-1, 1].

The grid consists of the endpoints and the interior roots of P'_N, the
corresponding Lobatto quadrature weights and the derivative matrix of the
cardinal (Lagrange) functions built on those nodes.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import ConvergenceError

NEWTON_MAX_ITER = 100


def legendre_eval(order, x):
    """Evaluate P_order(x) and P'_order(x) for a scalar x in [-1, 1].

    The derivative comes from (1 - x^2) P'_N = N (P_{N-1} - x P_N); at the
    endpoints the limit P'_N(+-1) = (+-1)^(N-1) N (N+1) / 2 is used.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    x = float(x)
    p, p_prev = kernels.legendre_pair(order, np.array([x]))
    p, p_prev = float(p[0]), float(p_prev[0])
    if order == 0:
        return p, 0.0
    if abs(x) == 1.0:
        sign = 1.0 if (x > 0 or order % 2 == 1) else -1.0
        return p, sign * order * (order + 1) / 2.0
    return p, order * (p_prev - x * p) / (1.0 - x * x)


@dataclass(frozen=True, eq=False)
class LobattoGrid:
    """Nodes, weights and cardinal derivative matrix of order ``order``.

    ``deriv_matrix[k, j]`` is g_j'(x_k). ``legendre_at_nodes`` caches
    P_N(x_j), which the cardinal functions need.
    """

    order: int
    nodes: np.ndarray
    weights: np.ndarray
    deriv_matrix: np.ndarray
    legendre_at_nodes: np.ndarray

    def cardinal(self, j, x):
        """Cardinal function g_j evaluated at points ``x`` (array-like)."""
        n = self.order
        x = np.atleast_1d(np.asarray(x, dtype=float))
        p, p_prev = kernels.legendre_pair(n, x)
        out = np.empty_like(x)
        at_node = np.isclose(x, self.nodes[j], rtol=0.0, atol=1e-15)
        xs = x[~at_node]
        # (1 - x^2) P'_N(x) = N (P_{N-1} - x P_N), finite at the endpoints
        lobatto_poly = n * (p_prev[~at_node] - xs * p[~at_node])
        out[~at_node] = -lobatto_poly / (
            n * (n + 1) * self.legendre_at_nodes[j] * (xs - self.nodes[j])
        )
        out[at_node] = 1.0
        return out

    def interpolate(self, values, x):
        """Evaluate the collocation interpolant of nodal ``values`` at ``x``."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return sum(values[j] * self.cardinal(j, x) for j in range(self.order + 1))


def _lobatto_nodes(order):
    # Chebyshev-Lobatto points are close enough for Newton to converge on
    # every interior root of P'_N without skipping one.
    x = -np.cos(np.pi * np.arange(order + 1) / order)
    interior = x[1:-1].copy()
    for _ in range(NEWTON_MAX_ITER):
        p, p_prev = kernels.legendre_pair(order, interior)
        # Newton step for q(x) = (1 - x^2) P'_N(x) = N (P_{N-1} - x P_N),
        # using q'(x) = -N (N + 1) P_N(x)
        step = (interior * p - p_prev) / ((order + 1) * p)
        interior = interior - step
        if np.max(np.abs(step)) < 1e-15:
            break
    else:
        raise ConvergenceError(f"Lobatto node iteration did not converge for N={order}")
    p, p_prev = kernels.legendre_pair(order, interior)
    dp = order * (p_prev - interior * p) / (1.0 - interior**2)
    # at a root of P'_N, (1 - x^2) P''_N = -N (N + 1) P_N; |P'| / |P''| bounds
    # the distance to the true root
    d2p = order * (order + 1) * np.abs(p) / (1.0 - interior**2)
    if np.max(np.abs(dp) / d2p) > 1e-14:
        raise ConvergenceError(f"Lobatto node residual too large for N={order}")
    # enforce exact symmetry x_j = -x_{N-j}
    interior = 0.5 * (interior - interior[::-1])
    return np.concatenate(([-1.0], interior, [1.0]))


@lru_cache(maxsize=32)
def build_lobatto_grid(order):
    """Build the Gauss-Lobatto-Legendre grid with ``order + 1`` nodes."""
    if order < 2:
        raise ValueError("order must be at least 2")
    nodes = _lobatto_nodes(order)
    p_nodes, _ = kernels.legendre_pair(order, nodes)
    weights = 2.0 / (order * (order + 1) * p_nodes**2)
    dmat = kernels.lobatto_deriv_matrix(nodes, p_nodes)
    for arr in (nodes, weights, dmat, p_nodes):
        arr.setflags(write=False)
    return LobattoGrid(order, nodes, weights, dmat, p_nodes)
