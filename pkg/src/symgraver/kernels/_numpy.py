"""Pure-numpy kernel backend; reference semantics for the numba backend."""

from __future__ import annotations

import numpy as np

_BITS = np.uint64(1) << np.arange(64, dtype=np.uint64)


def _masks(s: np.ndarray) -> tuple[np.uint64, np.uint64]:
    m = min(s.shape[0], 64)
    head = s[:m]
    pos = np.bitwise_or.reduce(_BITS[:m][head > 0], initial=np.uint64(0))
    neg = np.bitwise_or.reduce(_BITS[:m][head < 0], initial=np.uint64(0))
    return pos, neg


def first_conforming(rows, pos, neg, count, s, s_pos, s_neg, skip):
    """Index of the first stored row that conforms to s, or -1.

    Scan order is insertion order, which both backends share; the sign-mask
    prefilter only discards rows the entrywise check would reject anyway.
    """
    if count == 0:
        return -1
    cand = ((pos[:count] & ~s_pos) == 0) & ((neg[:count] & ~s_neg) == 0)
    if 0 <= skip < count:
        cand[skip] = False
    idx = np.flatnonzero(cand)
    if idx.size == 0:
        return -1
    sub = rows[idx]
    ok = ((sub <= 0) | (s >= sub)).all(axis=1) & ((sub >= 0) | (s <= sub)).all(axis=1)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return -1
    return int(idx[hits[0]])


def reduce_iterated(rows, pos, neg, count, s, chain):
    """Subtract the first conforming row until none conforms; s is updated
    in place, chain receives the row indices, the chain length is returned."""
    length = 0
    while True:
        s_pos, s_neg = _masks(s)
        r = first_conforming(rows, pos, neg, count, s, s_pos, s_neg, -1)
        if r < 0:
            return length
        if length == chain.shape[0]:
            return -1
        s -= rows[r]
        chain[length] = r
        length += 1


def canonical_batch(perms, vecs, d, out_canon, out_sel, out_norms):
    """Per input vector: lexicographically least orbit image, the least image
    attaining the minimal prefix norm, and that minimal norm."""
    for i in range(vecs.shape[0]):
        images = vecs[i][perms]
        order = np.lexsort(images.T[::-1])
        out_canon[i] = images[order[0]]
        norms = np.abs(images[:, :d]).sum(axis=1)
        mn = norms.min() if norms.size else 0
        att = images[norms == mn]
        order = np.lexsort(att.T[::-1])
        out_sel[i] = att[order[0]]
        out_norms[i] = mn
