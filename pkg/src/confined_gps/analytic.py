"""Closed-form energies and radial nodes of the free (unconfined) systems."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError


def free_iho_energy(n, ell, k=1.0):
    """Free isotropic oscillator level 2n + ell + 3/2, in hbar*omega units.

    ``k`` does not enter: multiply by sqrt(k) for hartree.
    """
    if n < 0 or ell < 0:
        raise ValueError("quantum numbers must be non-negative")
    return 2 * n + ell + 1.5


def free_hydrogen_energy(n_principal):
    if n_principal < 1:
        raise ValueError("principal quantum number starts at 1")
    return -1.0 / (2.0 * n_principal**2)


def davidson_energy(n, ell, lam):
    """Free Davidson oscillator level in hbar*omega units."""
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    return 2 * n + 1 + math.sqrt((ell + 0.5) ** 2 + lam)


def effective_ell(ell, lam):
    """The l_eff with l_eff (l_eff + 1) = ell (ell + 1) + lam."""
    return -0.5 + math.sqrt((ell + 0.5) ** 2 + lam)


def davidson_first_node(ell, lam):
    """Node of the free Davidson (1, ell) state, k = 1."""
    if lam < 0:
        raise ValueError("lambda must be non-negative")
    return math.sqrt((2.0 * effective_ell(ell, lam) + 3.0) / 2.0)


def laguerre(n, a, t):
    """Generalized Laguerre L_n^(a)(t) and its derivative, by recurrence."""
    t = np.asarray(t, dtype=float)
    prev = np.ones_like(t)
    if n == 0:
        return prev, np.zeros_like(t)
    cur = 1.0 + a - t
    for j in range(1, n):
        prev, cur = cur, ((2 * j + 1 + a - t) * cur - (j + a) * prev) / (j + 1)
    # t L_n' = n L_n - (n + a) L_{n-1}
    with np.errstate(divide="ignore", invalid="ignore"):
        deriv = (n * cur - (n + a) * prev) / t
    return cur, deriv


def laguerre_roots(n, a, tol=1e-14, max_iter=200):
    """The ``n`` roots of L_n^(a), ascending, via Newton with deflation."""
    roots = []
    t = (1.0 + a) * (3.0 + 0.92 * a) / (1.0 + 2.4 * n + 1.8 * a)
    for i in range(n):
        if i == 1:
            t = roots[0] + (15.0 + 6.25 * a) / (1.0 + 0.9 * a + 2.5 * n)
        elif i > 1:
            t = roots[-1] + (roots[-1] - roots[-2]) * 1.5
        for _ in range(max_iter):
            val, der = laguerre(n, a, t)
            if val == 0.0:
                break
            # Newton on L / prod(t - t_found)
            ratio = float(der / val) - sum(1.0 / (t - s) for s in roots)
            step = 1.0 / ratio
            t -= step
            if abs(step) <= tol * max(1.0, abs(t)):
                break
        else:
            raise ConvergenceError(f"Laguerre root {i} of L_{n}^({a}) did not converge")
        # polish on the undeflated polynomial
        for _ in range(3):
            val, der = laguerre(n, a, t)
            if val == 0.0:
                break
            t -= float(val / der)
        roots.append(t)
    roots = sorted(roots)
    if len(roots) != n or any(b - a_ <= 0 for a_, b in zip(roots, roots[1:])):
        raise ConvergenceError(f"root search for L_{n}^({a}) lost a root")
    return np.array(roots)


@dataclass(frozen=True)
class NodeSet:
    state: tuple
    nodes: tuple
    force_constant: float


def iho_nodes(n, ell, k=1.0):
    """Radial nodes of the free oscillator (n, ell) state.

    The radial function is r^ell L_n^(ell+1/2)(sqrt(k) r^2) exp(-sqrt(k) r^2 / 2),
    so the nodes are sqrt(t_i) / k^(1/4) over the Laguerre roots t_i.
    """
    if n < 1:
        raise ValueError("only n >= 1 states have radial nodes")
    if not k > 0:
        raise ValueError("force constant must be positive")
    t = laguerre_roots(n, ell + 0.5)
    nodes = np.sqrt(t) / k**0.25
    return NodeSet((n, ell), tuple(float(x) for x in nodes), float(k))
