# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Same contracts as the numpy versions in ``_kernels_py``; see that module
for the argument conventions.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, hypot, copysign

cnp.import_array()

cdef double EPS = np.finfo(float).eps
cdef double SAFMIN = np.finfo(float).tiny


def legendre_pair(int order, x):
    cdef cnp.ndarray[double, ndim=1] xs = np.ascontiguousarray(x, dtype=float).ravel()
    cdef Py_ssize_t m = xs.shape[0]
    cdef cnp.ndarray[double, ndim=1] p_out = np.empty(m)
    cdef cnp.ndarray[double, ndim=1] q_out = np.empty(m)
    cdef Py_ssize_t j
    cdef int k
    cdef double xv, p, q, t
    for j in range(m):
        xv = xs[j]
        if order == 0:
            p = 1.0
            q = 0.0
        else:
            q = 1.0
            p = xv
            for k in range(2, order + 1):
                t = ((2 * k - 1) * xv * p - (k - 1) * q) / k
                q = p
                p = t
        p_out[j] = p
        q_out[j] = q
    shape = np.shape(x)
    return p_out.reshape(shape), q_out.reshape(shape)


def lobatto_deriv_matrix(const double[::1] nodes, const double[::1] p_at_nodes):
    cdef Py_ssize_t n = nodes.shape[0]
    cdef Py_ssize_t order = n - 1
    cdef cnp.ndarray[double, ndim=2] out = np.zeros((n, n))
    cdef double[:, ::1] dm = out
    cdef Py_ssize_t k, j
    for k in range(n):
        for j in range(n):
            if k != j:
                dm[k, j] = p_at_nodes[k] / (p_at_nodes[j] * (nodes[k] - nodes[j]))
    dm[0, 0] = -order * (order + 1) / 4.0
    dm[order, order] = order * (order + 1) / 4.0
    return out


def tridiagonalize(a, bint want_vectors):
    cdef cnp.ndarray[double, ndim=2] arr = np.array(a, dtype=float, order="C")
    cdef double[:, ::1] v = arr
    cdef Py_ssize_t n = v.shape[0]
    cdef cnp.ndarray[double, ndim=1] d_arr = np.zeros(n)
    cdef cnp.ndarray[double, ndim=1] e_arr = np.zeros(n)
    cdef double[::1] d = d_arr
    cdef double[::1] e = e_arr
    cdef Py_ssize_t i, j, k, l
    cdef double scale, h, f, g, hh

    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        scale = 0.0
        if l > 0:
            for k in range(l + 1):
                scale += fabs(v[i, k])
            if scale == 0.0:
                e[i] = v[i, l]
            else:
                for k in range(l + 1):
                    v[i, k] /= scale
                    h += v[i, k] * v[i, k]
                f = v[i, l]
                g = -copysign(sqrt(h), f)
                e[i] = scale * g
                h -= f * g
                v[i, l] = f - g
                f = 0.0
                for j in range(l + 1):
                    if want_vectors:
                        v[j, i] = v[i, j] / h
                    g = 0.0
                    for k in range(j + 1):
                        g += v[j, k] * v[i, k]
                    for k in range(j + 1, l + 1):
                        g += v[k, j] * v[i, k]
                    e[j] = g / h
                    f += e[j] * v[i, j]
                hh = f / (h + h)
                for j in range(l + 1):
                    f = v[i, j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        v[j, k] -= f * e[k] + g * v[i, k]
        else:
            e[i] = v[i, l]
        d[i] = h
    d[0] = 0.0
    e[0] = 0.0

    if not want_vectors:
        for i in range(n):
            d[i] = v[i, i]
        return d_arr, e_arr, None

    for i in range(n):
        l = i - 1
        if d[i] != 0.0:
            for j in range(l + 1):
                g = 0.0
                for k in range(l + 1):
                    g += v[i, k] * v[k, j]
                for k in range(l + 1):
                    v[k, j] -= g * v[k, i]
        d[i] = v[i, i]
        v[i, i] = 1.0
        for j in range(l + 1):
            v[j, i] = 0.0
            v[i, j] = 0.0
    return d_arr, e_arr, arr


def tql_implicit(d_in, e_in, z_in, int max_iter):
    cdef cnp.ndarray[double, ndim=1] d_arr = np.array(d_in, dtype=float)
    cdef cnp.ndarray[double, ndim=1] e_arr = np.array(e_in, dtype=float)
    cdef double[::1] d = d_arr
    cdef double[::1] e = e_arr
    cdef Py_ssize_t n = d.shape[0]
    cdef bint vectors = z_in is not None
    cdef cnp.ndarray[double, ndim=2] zt_arr
    cdef double[:, ::1] zt
    cdef Py_ssize_t l, m, i, k
    cdef int it
    cdef double dd, g, r, s, c, p, f, b
    cdef bint underflow
    if vectors:
        # rows of zt are the columns of z, so rotations touch contiguous memory
        zt_arr = np.array(np.asarray(z_in).T, dtype=float, order="C")
        zt = zt_arr

    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0

    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = fabs(d[m]) + fabs(d[m + 1])
                if fabs(e[m]) <= EPS * dd or fabs(e[m]) <= SAFMIN:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                return d_arr, (zt_arr.T if vectors else None), False
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = hypot(f, g)
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
                if vectors:
                    for k in range(n):
                        f = zt[i + 1, k]
                        zt[i + 1, k] = s * zt[i, k] + c * f
                        zt[i, k] = c * zt[i, k] - s * f
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d_arr, (zt_arr.T if vectors else None), True
