"""Pure-Python (numpy) kernel backend.

Implements exactly the same rounding sequence as the compiled backend:
each elementary product is rounded to nearest and stepped one value
outward, each accumulation step likewise, and terms whose product is an
exact zero are skipped without touching the accumulator.  Both backends
therefore produce bit-identical results; this one is simply slower.
"""

from __future__ import annotations

import numpy as np

_INF = np.inf

BACKEND = "pure"


def _as1d(x):
    a = np.ascontiguousarray(x, dtype=np.float64)
    if a.ndim != 1:
        raise ValueError("expected 1-D array")
    return a


def _as2d(x):
    a = np.ascontiguousarray(x, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("expected 2-D array")
    return a


def iconv(alo, ahi, blo, bhi):
    """Rigorous full linear convolution of two interval vectors."""
    alo, ahi, blo, bhi = _as1d(alo), _as1d(ahi), _as1d(blo), _as1d(bhi)
    na, nb = alo.size, blo.size
    if ahi.size != na or bhi.size != nb:
        raise ValueError("lo/hi size mismatch")
    n = na + nb - 1
    clo = np.zeros(n)
    chi = np.zeros(n)
    for i in range(na):
        al = alo[i]
        ah = ahi[i]
        if al == 0.0 and ah == 0.0:
            continue
        p1 = al * blo
        p2 = al * bhi
        p3 = ah * blo
        p4 = ah * bhi
        plo = np.minimum(np.minimum(p1, p2), np.minimum(p3, p4))
        phi = np.maximum(np.maximum(p1, p2), np.maximum(p3, p4))
        exact0 = (plo == 0.0) & (phi == 0.0)
        plo = np.nextafter(plo, -_INF)
        phi = np.nextafter(phi, _INF)
        seg = slice(i, i + nb)
        slo = np.nextafter(clo[seg] + plo, -_INF)
        shi = np.nextafter(chi[seg] + phi, _INF)
        clo[seg] = np.where(exact0, clo[seg], slo)
        chi[seg] = np.where(exact0, chi[seg], shi)
    return clo, chi


def matmul_pi(a, blo, bhi):
    """Rigorous product of a point matrix with an interval matrix."""
    a, blo, bhi = _as2d(a), _as2d(blo), _as2d(bhi)
    n, kk = a.shape
    k2, m = blo.shape
    if kk != k2 or bhi.shape != blo.shape:
        raise ValueError("dimension mismatch")
    clo = np.zeros((n, m))
    chi = np.zeros((n, m))
    for k in range(kk):
        col = a[:, k][:, None]
        p1 = col * blo[k][None, :]
        p2 = col * bhi[k][None, :]
        plo = np.minimum(p1, p2)
        phi = np.maximum(p1, p2)
        exact0 = (plo == 0.0) & (phi == 0.0)
        plo = np.nextafter(plo, -_INF)
        phi = np.nextafter(phi, _INF)
        slo = np.nextafter(clo + plo, -_INF)
        shi = np.nextafter(chi + phi, _INF)
        clo = np.where(exact0, clo, slo)
        chi = np.where(exact0, chi, shi)
    return clo, chi


def matmul_ii(alo, ahi, blo, bhi):
    """Rigorous product of two interval matrices."""
    alo, ahi, blo, bhi = _as2d(alo), _as2d(ahi), _as2d(blo), _as2d(bhi)
    n, kk = alo.shape
    k2, m = blo.shape
    if kk != k2 or ahi.shape != alo.shape or bhi.shape != blo.shape:
        raise ValueError("dimension mismatch")
    clo = np.zeros((n, m))
    chi = np.zeros((n, m))
    for k in range(kk):
        al = alo[:, k][:, None]
        ah = ahi[:, k][:, None]
        bl = blo[k][None, :]
        bh = bhi[k][None, :]
        p1 = al * bl
        p2 = al * bh
        p3 = ah * bl
        p4 = ah * bh
        plo = np.minimum(np.minimum(p1, p2), np.minimum(p3, p4))
        phi = np.maximum(np.maximum(p1, p2), np.maximum(p3, p4))
        exact0 = (plo == 0.0) & (phi == 0.0)
        plo = np.nextafter(plo, -_INF)
        phi = np.nextafter(phi, _INF)
        slo = np.nextafter(clo + plo, -_INF)
        shi = np.nextafter(chi + phi, _INF)
        clo = np.where(exact0, clo, slo)
        chi = np.where(exact0, chi, shi)
    return clo, chi
