"""Numba-compiled kernel backend."""

from __future__ import annotations

import numpy as np
from numba import njit

_BITS = np.uint64(1) << np.arange(64, dtype=np.uint64)


@njit(cache=True, nogil=True)
def first_conforming(rows, pos, neg, count, s, s_pos, s_neg, skip):
    n = s.shape[0]
    for r in range(count):
        if r == skip:
            continue
        if (pos[r] & ~s_pos) != np.uint64(0):
            continue
        if (neg[r] & ~s_neg) != np.uint64(0):
            continue
        ok = True
        for j in range(n):
            gj = rows[r, j]
            if gj > 0:
                if s[j] < gj:
                    ok = False
                    break
            elif gj < 0:
                if s[j] > gj:
                    ok = False
                    break
        if ok:
            return r
    return -1


@njit(cache=True, nogil=True)
def reduce_iterated(rows, pos, neg, count, s, chain):
    n = s.shape[0]
    m = min(n, 64)
    length = 0
    while True:
        s_pos = np.uint64(0)
        s_neg = np.uint64(0)
        for j in range(m):
            if s[j] > 0:
                s_pos |= _BITS[j]
            elif s[j] < 0:
                s_neg |= _BITS[j]
        r = first_conforming(rows, pos, neg, count, s, s_pos, s_neg, -1)
        if r < 0:
            return length
        if length == chain.shape[0]:
            return -1
        for j in range(n):
            s[j] -= rows[r, j]
        chain[length] = r
        length += 1


@njit(cache=True, nogil=True)
def _lex_less(a, b, n):
    for j in range(n):
        if a[j] != b[j]:
            return a[j] < b[j]
    return False


@njit(cache=True, nogil=True)
def canonical_batch(perms, vecs, d, out_canon, out_sel, out_norms):
    m = perms.shape[0]
    n = perms.shape[1]
    img = np.empty(n, dtype=np.int64)
    for i in range(vecs.shape[0]):
        best_norm = np.int64(0)
        for p in range(m):
            for j in range(n):
                img[j] = vecs[i, perms[p, j]]
            norm = np.int64(0)
            for j in range(d):
                norm += abs(img[j])
            if p == 0:
                for j in range(n):
                    out_canon[i, j] = img[j]
                    out_sel[i, j] = img[j]
                best_norm = norm
            else:
                if _lex_less(img, out_canon[i], n):
                    for j in range(n):
                        out_canon[i, j] = img[j]
                if norm < best_norm or (norm == best_norm and _lex_less(img, out_sel[i], n)):
                    for j in range(n):
                        out_sel[i, j] = img[j]
                    best_norm = norm
            out_norms[i] = best_norm
