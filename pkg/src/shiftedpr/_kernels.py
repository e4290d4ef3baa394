"""Batch insertion kernels over arrays of permutations.

Every kernel is written in the numba-compatible subset of Python. When numba
is available and ``SHIFTEDPR_NO_NUMBA`` is unset the kernels are compiled with
``@njit``; otherwise the same source runs as plain Python over numpy arrays.

Tableaux are returned as dense ``(N, n, n)`` int8 grids indexed by absolute
(row, column); 0 marks an empty cell and a negative value a primed entry.
"""
from __future__ import annotations

import numpy as np

from .config import numba_enabled

NUMBA = numba_enabled()

if NUMBA:
    from numba import njit

    jit = njit(cache=True, nogil=True)
else:
    def jit(func):
        func.py_func = func
        return func


@jit
def sw_insert_batch(perms):
    """Sagan-Worley insertion of each row of ``perms``; returns (P, Q) grids."""
    N, n = perms.shape
    P = np.zeros((N, n, n), np.int8)
    Q = np.zeros((N, n, n), np.int8)
    rowlen = np.zeros(n + 1, np.int64)
    for k in range(N):
        for i in range(n + 1):
            rowlen[i] = 0
        nrows = 0
        for step in range(n):
            x = perms[k, step]
            r = 0
            col_mode = False
            c = 0
            br = 0
            bc = 0
            while True:
                if r == nrows:
                    P[k, r, r] = x
                    rowlen[r] = 1
                    nrows += 1
                    br = r
                    bc = r
                    break
                j = -1
                for cc in range(r, r + rowlen[r]):
                    if P[k, r, cc] > x:
                        j = cc
                        break
                if j == -1:
                    cc = r + rowlen[r]
                    P[k, r, cc] = x
                    rowlen[r] += 1
                    br = r
                    bc = cc
                    break
                y = P[k, r, j]
                P[k, r, j] = x
                x = y
                if j == r:
                    col_mode = True
                    c = r + 1
                    break
                r += 1
            if col_mode:
                while True:
                    i = 0
                    found = -1
                    while i < nrows and i <= c and i + rowlen[i] > c:
                        if P[k, i, c] > x:
                            found = i
                            break
                        i += 1
                    if found == -1:
                        P[k, i, c] = x
                        if i == nrows:
                            rowlen[i] = 1
                            nrows += 1
                        else:
                            rowlen[i] += 1
                        br = i
                        bc = c
                        break
                    y = P[k, found, c]
                    P[k, found, c] = x
                    x = y
                    c += 1
            if col_mode:
                Q[k, br, bc] = -(step + 1)
            else:
                Q[k, br, bc] = step + 1
    return P, Q


@jit
def rs_insert_batch(perms):
    """Classical row insertion; grids are left-justified."""
    N, n = perms.shape
    P = np.zeros((N, n, n), np.int8)
    Q = np.zeros((N, n, n), np.int8)
    rowlen = np.zeros(n + 1, np.int64)
    for k in range(N):
        for i in range(n + 1):
            rowlen[i] = 0
        for step in range(n):
            x = perms[k, step]
            r = 0
            while True:
                j = -1
                for cc in range(rowlen[r]):
                    if P[k, r, cc] > x:
                        j = cc
                        break
                if j == -1:
                    P[k, r, rowlen[r]] = x
                    Q[k, r, rowlen[r]] = step + 1
                    rowlen[r] += 1
                    break
                y = P[k, r, j]
                P[k, r, j] = x
                x = y
                r += 1
    return P, Q


@jit
def marked_descent_masks(Q):
    """Bitmask (bit i for descent i) of each marked-standard grid."""
    N, n, _ = Q.shape
    out = np.zeros(N, np.int64)
    row = np.zeros(n + 2, np.int64)
    primed = np.zeros(n + 2, np.bool_)
    for k in range(N):
        for r in range(n):
            for c in range(n):
                e = Q[k, r, c]
                if e != 0:
                    v = e if e > 0 else -e
                    row[v] = r
                    primed[v] = e < 0
        m = 0
        for i in range(1, n):
            if not primed[i] and row[i] < row[i + 1]:
                m |= 1 << i
            elif primed[i + 1] and row[i + 1] <= row[i]:
                m |= 1 << i
        out[k] = m
    return out


def descent_masks(perms: np.ndarray) -> np.ndarray:
    """Vectorised Des(w) bitmasks."""
    perms = np.asarray(perms)
    if perms.shape[1] < 2:
        return np.zeros(perms.shape[0], np.int64)
    drops = perms[:, :-1] > perms[:, 1:]
    weights = np.left_shift(np.int64(1), np.arange(1, perms.shape[1], dtype=np.int64))
    return (drops * weights).sum(axis=1).astype(np.int64)


def peak_masks(des: np.ndarray) -> np.ndarray:
    """Peak(D) = {i in D, i != 1, i - 1 not in D} on bitmasks."""
    des = np.asarray(des, dtype=np.int64)
    return des & ~(des << 1) & ~np.int64(2)


def inverse_batch(perms: np.ndarray) -> np.ndarray:
    perms = np.asarray(perms)
    inv = np.empty_like(perms)
    rows = np.arange(perms.shape[0])[:, None]
    inv[rows, perms.astype(np.int64) - 1] = np.arange(1, perms.shape[1] + 1, dtype=perms.dtype)
    return inv
