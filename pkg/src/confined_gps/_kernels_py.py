"""Pure numpy implementations of the numerical kernels.

Used when the compiled extension ``confined_gps._kernels`` is not
available. Every function here has the same signature and semantics as its
Cython counterpart in ``_kernels.pyx``.
"""

import math

import numpy as np

EPS = np.finfo(float).eps
# below this an off-diagonal entry counts as zero whatever its neighbours
SAFMIN = np.finfo(float).tiny


def legendre_pair(order, x):
    """Return ``(P_order(x), P_{order-1}(x))`` elementwise for an array ``x``."""
    x = np.asarray(x, dtype=float)
    if order == 0:
        return np.ones_like(x), np.zeros_like(x)
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(2, order + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    return p, p_prev


def lobatto_deriv_matrix(nodes, p_at_nodes):
    order = len(nodes) - 1
    diff = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(diff, 1.0)
    dmat = p_at_nodes[:, None] / (p_at_nodes[None, :] * diff)
    np.fill_diagonal(dmat, 0.0)
    dmat[0, 0] = -order * (order + 1) / 4.0
    dmat[order, order] = order * (order + 1) / 4.0
    return dmat


def tridiagonalize(a, want_vectors):
    """Householder reduction of a symmetric matrix to tridiagonal form.

    Returns ``(d, e, q)`` with ``d`` the diagonal, ``e[1:]`` the
    subdiagonal (``e[0] == 0``) and ``q`` the accumulated orthogonal
    transform (``None`` unless ``want_vectors``). ``a`` is not modified.
    """
    v = np.array(a, dtype=float, order="C")
    n = v.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    # row i is reduced using the leading i x i block, from the bottom up
    for i in range(n - 1, 0, -1):
        row = v[i, :i]
        scale = np.abs(row).sum()
        if i == 1 or scale == 0.0:
            e[i] = v[i, i - 1]
            d[i] = 0.0
            continue
        u = row / scale
        h = float(u @ u)
        f = u[i - 1]
        g = -math.copysign(math.sqrt(h), f)
        e[i] = scale * g
        h -= f * g
        u[i - 1] = f - g
        v[i, :i] = u
        if want_vectors:
            v[:i, i] = u / h
        block = v[:i, :i]
        p = (block @ u) / h
        kfac = float(u @ p) / (h + h)
        p -= kfac * u
        block -= np.outer(u, p) + np.outer(p, u)
        d[i] = h
    d[0] = 0.0
    e[0] = 0.0
    q = None
    if want_vectors:
        for i in range(n):
            if d[i] != 0.0:
                g = v[i, :i] @ v[:i, :i]
                v[:i, :i] -= np.outer(v[:i, i], g)
            d[i] = v[i, i]
            v[i, i] = 1.0
            v[i, :i] = 0.0
            v[:i, i] = 0.0
        q = v
    else:
        d = np.diagonal(v).copy()
    return d, e, q


def tql_implicit(d, e, z, max_iter):
    """Implicitly shifted QL on a symmetric tridiagonal matrix.

    ``d`` holds the diagonal and ``e[1:]`` the subdiagonal. When ``z`` is
    not ``None`` a rotated copy is returned whose columns are the
    eigenvectors of the original matrix. Returns ``(eigenvalues, z, ok)``;
    ``ok`` is False if some eigenvalue needed more than ``max_iter`` sweeps.
    Eigenvalues are returned unsorted.
    """
    d = np.array(d, dtype=float)
    e = np.array(e, dtype=float)
    n = d.shape[0]
    zt = None if z is None else np.array(np.asarray(z).T, order="C")
    e[:-1] = e[1:]
    e[-1] = 0.0
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd or abs(e[m]) <= SAFMIN:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                return d, (None if zt is None else zt.T), False
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if zt is not None:
                    zi = zt[i].copy()
                    zt[i] = c * zi - s * zt[i + 1]
                    zt[i + 1] = s * zi + c * zt[i + 1]
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, (None if zt is None else zt.T), True
