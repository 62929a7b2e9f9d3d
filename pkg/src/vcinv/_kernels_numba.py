"""Numba-compiled elimination kernels over F_q (default backend).

Same contracts as the numpy fallback: in-place elimination on reduced code
matrices.  The mod-p kernels keep every intermediate nonnegative so the modulo
stays on the fast path.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _inv_mod(a, p):
    e = p - 2
    inv = 1
    b = a % p
    while e > 0:
        if e & 1:
            inv = inv * b % p
        b = b * b % p
        e >>= 1
    return inv


@njit(cache=True)
def rank_mod_p(M, p):
    m, n = M.shape
    r = 0
    for c in range(n):
        piv = -1
        for i in range(r, m):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        inv = _inv_mod(M[r, c], p)
        for i in range(r + 1, m):
            f = M[i, c]
            if f != 0:
                g = p - f * inv % p
                for j in range(c, n):
                    M[i, j] = (M[i, j] + g * M[r, j]) % p
        r += 1
        if r == m:
            break
    return r


@njit(cache=True)
def rref_mod_p(M, p):
    m, n = M.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        piv = -1
        for i in range(r, m):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        inv = _inv_mod(M[r, c], p)
        if inv != 1:
            for j in range(c, n):
                M[r, j] = M[r, j] * inv % p
        for i in range(m):
            if i == r:
                continue
            f = M[i, c]
            if f != 0:
                g = p - f
                for j in range(c, n):
                    M[i, j] = (M[i, j] + g * M[r, j]) % p
        pivots[r] = c
        r += 1
        if r == m:
            break
    return pivots[:r].copy()


@njit(cache=True)
def rank_gf2_packed(P, ncols):
    m, nw = P.shape
    one = np.uint64(1)
    r = 0
    for c in range(ncols):
        w = c >> 6
        b = np.uint64(c & 63)
        piv = -1
        for i in range(r, m):
            if (P[i, w] >> b) & one:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(w, nw):
                t = P[r, j]
                P[r, j] = P[piv, j]
                P[piv, j] = t
        for i in range(r + 1, m):
            if (P[i, w] >> b) & one:
                for j in range(w, nw):
                    P[i, j] ^= P[r, j]
        r += 1
        if r == m:
            break
    return r


@njit(cache=True)
def rank_tables(M, mul_t, sub_t, inv_t):
    m, n = M.shape
    r = 0
    for c in range(n):
        piv = -1
        for i in range(r, m):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        inv = inv_t[M[r, c]]
        for i in range(r + 1, m):
            f = M[i, c]
            if f != 0:
                f = mul_t[f, inv]
                for j in range(c, n):
                    M[i, j] = sub_t[M[i, j], mul_t[f, M[r, j]]]
        r += 1
        if r == m:
            break
    return r


@njit(cache=True)
def rref_tables(M, mul_t, sub_t, inv_t):
    m, n = M.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        piv = -1
        for i in range(r, m):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        inv = inv_t[M[r, c]]
        if inv != 1:
            for j in range(c, n):
                M[r, j] = mul_t[M[r, j], inv]
        for i in range(m):
            if i == r:
                continue
            f = M[i, c]
            if f != 0:
                for j in range(c, n):
                    M[i, j] = sub_t[M[i, j], mul_t[f, M[r, j]]]
        pivots[r] = c
        r += 1
        if r == m:
            break
    return pivots[:r].copy()
