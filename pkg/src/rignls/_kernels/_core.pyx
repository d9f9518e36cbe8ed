# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend.

Same rounding sequence as ``_pure``: nearest product, one outward step,
nearest accumulation, one outward step, exact zeros skipped.  The two
backends are bit-identical by construction.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, nextafter

cnp.import_array()

BACKEND = "compiled"


cdef inline double _min4(double a, double b, double c, double d) nogil:
    cdef double m = a
    if b < m:
        m = b
    if c < m:
        m = c
    if d < m:
        m = d
    return m


cdef inline double _max4(double a, double b, double c, double d) nogil:
    cdef double m = a
    if b > m:
        m = b
    if c > m:
        m = c
    if d > m:
        m = d
    return m


def iconv(alo, ahi, blo, bhi):
    """Rigorous full linear convolution of two interval vectors."""
    cdef double[::1] al = np.ascontiguousarray(alo, dtype=np.float64)
    cdef double[::1] ah = np.ascontiguousarray(ahi, dtype=np.float64)
    cdef double[::1] bl = np.ascontiguousarray(blo, dtype=np.float64)
    cdef double[::1] bh = np.ascontiguousarray(bhi, dtype=np.float64)
    cdef Py_ssize_t na = al.shape[0], nb = bl.shape[0]
    if ah.shape[0] != na or bh.shape[0] != nb:
        raise ValueError("lo/hi size mismatch")
    out_lo = np.zeros(na + nb - 1)
    out_hi = np.zeros(na + nb - 1)
    cdef double[::1] cl = out_lo
    cdef double[::1] ch = out_hi
    cdef Py_ssize_t i, j, o
    cdef double x1, x2, p1, p2, p3, p4, plo, phi
    with nogil:
        for i in range(na):
            x1 = al[i]
            x2 = ah[i]
            if x1 == 0.0 and x2 == 0.0:
                continue
            for j in range(nb):
                p1 = x1 * bl[j]
                p2 = x1 * bh[j]
                p3 = x2 * bl[j]
                p4 = x2 * bh[j]
                plo = _min4(p1, p2, p3, p4)
                phi = _max4(p1, p2, p3, p4)
                if plo == 0.0 and phi == 0.0:
                    continue
                plo = nextafter(plo, -INFINITY)
                phi = nextafter(phi, INFINITY)
                o = i + j
                cl[o] = nextafter(cl[o] + plo, -INFINITY)
                ch[o] = nextafter(ch[o] + phi, INFINITY)
    return out_lo, out_hi


def matmul_pi(a, blo, bhi):
    """Rigorous product of a point matrix with an interval matrix."""
    cdef double[:, ::1] am = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[:, ::1] bl = np.ascontiguousarray(blo, dtype=np.float64)
    cdef double[:, ::1] bh = np.ascontiguousarray(bhi, dtype=np.float64)
    cdef Py_ssize_t n = am.shape[0], kk = am.shape[1], m = bl.shape[1]
    if bl.shape[0] != kk or bh.shape[0] != kk or bh.shape[1] != m:
        raise ValueError("dimension mismatch")
    out_lo = np.zeros((n, m))
    out_hi = np.zeros((n, m))
    cdef double[:, ::1] cl = out_lo
    cdef double[:, ::1] ch = out_hi
    cdef Py_ssize_t i, j, k
    cdef double x, p1, p2, plo, phi
    with nogil:
        for k in range(kk):
            for i in range(n):
                x = am[i, k]
                if x == 0.0:
                    continue
                for j in range(m):
                    p1 = x * bl[k, j]
                    p2 = x * bh[k, j]
                    if p1 < p2:
                        plo = p1
                        phi = p2
                    else:
                        plo = p2
                        phi = p1
                    if plo == 0.0 and phi == 0.0:
                        continue
                    plo = nextafter(plo, -INFINITY)
                    phi = nextafter(phi, INFINITY)
                    cl[i, j] = nextafter(cl[i, j] + plo, -INFINITY)
                    ch[i, j] = nextafter(ch[i, j] + phi, INFINITY)
    return out_lo, out_hi


def matmul_ii(alo, ahi, blo, bhi):
    """Rigorous product of two interval matrices."""
    cdef double[:, ::1] al = np.ascontiguousarray(alo, dtype=np.float64)
    cdef double[:, ::1] ah = np.ascontiguousarray(ahi, dtype=np.float64)
    cdef double[:, ::1] bl = np.ascontiguousarray(blo, dtype=np.float64)
    cdef double[:, ::1] bh = np.ascontiguousarray(bhi, dtype=np.float64)
    cdef Py_ssize_t n = al.shape[0], kk = al.shape[1], m = bl.shape[1]
    if (ah.shape[0] != n or ah.shape[1] != kk or bl.shape[0] != kk
            or bh.shape[0] != kk or bh.shape[1] != m):
        raise ValueError("dimension mismatch")
    out_lo = np.zeros((n, m))
    out_hi = np.zeros((n, m))
    cdef double[:, ::1] cl = out_lo
    cdef double[:, ::1] ch = out_hi
    cdef Py_ssize_t i, j, k
    cdef double x1, x2, p1, p2, p3, p4, plo, phi
    with nogil:
        for k in range(kk):
            for i in range(n):
                x1 = al[i, k]
                x2 = ah[i, k]
                if x1 == 0.0 and x2 == 0.0:
                    continue
                for j in range(m):
                    p1 = x1 * bl[k, j]
                    p2 = x1 * bh[k, j]
                    p3 = x2 * bl[k, j]
                    p4 = x2 * bh[k, j]
                    plo = _min4(p1, p2, p3, p4)
                    phi = _max4(p1, p2, p3, p4)
                    if plo == 0.0 and phi == 0.0:
                        continue
                    plo = nextafter(plo, -INFINITY)
                    phi = nextafter(phi, INFINITY)
                    cl[i, j] = nextafter(cl[i, j] + plo, -INFINITY)
                    ch[i, j] = nextafter(ch[i, j] + phi, INFINITY)
    return out_lo, out_hi
