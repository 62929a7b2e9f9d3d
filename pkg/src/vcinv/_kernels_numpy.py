"""Pure-numpy elimination kernels over F_q (fallback backend).

All functions mutate their matrix argument in place and assume entries are
already reduced (codes in [0, q)).  Row operations are vectorized per pivot.
"""

from __future__ import annotations

import numpy as np


def rank_mod_p(M: np.ndarray, p: int) -> int:
    m, n = M.shape
    r = 0
    for c in range(n):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        f = M[r + 1 :, c] * inv % p
        hit = np.nonzero(f)[0]
        if hit.size:
            rows = hit + r + 1
            M[rows[:, None], np.arange(c, n)[None, :]] = (
                M[rows][:, c:] + (p - f[hit])[:, None] * M[r, c:]
            ) % p
        r += 1
        if r == m:
            break
    return r


def rref_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    """Reduce to fully reduced row echelon form; returns pivot column indices."""
    m, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        if inv != 1:
            M[r] = M[r] * inv % p
        f = M[:, c].copy()
        f[r] = 0
        hit = np.nonzero(f)[0]
        if hit.size:
            M[hit] = (M[hit] + (p - f[hit])[:, None] * M[r]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    return np.asarray(pivots, dtype=np.int64)


def rank_gf2_packed(P: np.ndarray, ncols: int) -> int:
    m = P.shape[0]
    one = np.uint64(1)
    r = 0
    for c in range(ncols):
        w = c >> 6
        b = np.uint64(c & 63)
        nz = np.nonzero((P[r:, w] >> b) & one)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            P[[r, piv]] = P[[piv, r]]
        hit = np.nonzero((P[r + 1 :, w] >> b) & one)[0]
        if hit.size:
            rows = hit + r + 1
            P[rows] ^= P[r]
        r += 1
        if r == m:
            break
    return r


def rank_tables(M: np.ndarray, mul_t: np.ndarray, sub_t: np.ndarray, inv_t: np.ndarray) -> int:
    m, n = M.shape
    r = 0
    for c in range(n):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = inv_t[M[r, c]]
        f = mul_t[M[r + 1 :, c], inv]
        hit = np.nonzero(f)[0]
        if hit.size:
            rows = hit + r + 1
            M[rows[:, None], np.arange(c, n)[None, :]] = sub_t[
                M[rows][:, c:], mul_t[f[hit][:, None], M[r, c:][None, :]]
            ]
        r += 1
        if r == m:
            break
    return r


def rref_tables(M: np.ndarray, mul_t: np.ndarray, sub_t: np.ndarray, inv_t: np.ndarray) -> np.ndarray:
    m, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = inv_t[M[r, c]]
        if inv != 1:
            M[r] = mul_t[M[r], inv]
        f = M[:, c].copy()
        f[r] = 0
        hit = np.nonzero(f)[0]
        if hit.size:
            M[hit] = sub_t[M[hit], mul_t[f[hit][:, None], M[r][None, :]]]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return np.asarray(pivots, dtype=np.int64)
