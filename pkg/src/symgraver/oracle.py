"""Brute-force certification of Graver bases.

Deliberately independent of the completion engines: the only shared pieces
are the vector type and exact lattice membership.  ``is_graver_element``
decides conformal minimality by enumerating the whole dominated box, and
``brute_force_graver`` enumerates integer coefficient combinations of the
basis rows inside an infinity-norm ball.  Slow, transparent, and exact.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .errors import MembershipError, ResourceLimitError
from .lattice import LatticeBasis
from .vectors import IntVector, is_zero

DEFAULT_BOX_CAP = 10**8
DEFAULT_NODE_CAP = 10**7


def is_graver_element(
    v: Sequence[int], basis: LatticeBasis, *, box_cap: int = DEFAULT_BOX_CAP
) -> bool:
    """True iff v is conformally minimal among nonzero lattice vectors.

    Enumerates every u with u conforming to v (the box of sign-directed
    intervals [0, v_j]) in odometer order and returns False on the first
    lattice point other than 0 and v.  The box size is checked against
    ``box_cap`` before enumeration starts.
    """
    v = tuple(int(x) for x in v)
    if is_zero(v):
        raise ValueError("the zero vector is not a candidate Graver element")
    if not basis.member(v):
        raise MembershipError(f"{v} is not in the lattice")
    size = 1
    for x in v:
        size *= abs(x) + 1
        if size > box_cap:
            raise ResourceLimitError(f"dominated box exceeds {box_cap} points")
    zero = (0,) * len(v)
    ranges = [range(0, x + 1) if x >= 0 else range(x, 1) for x in v]
    for u in product(*ranges):
        if u == zero or u == v:
            continue
        if basis.member(u):
            return False
    return True


def brute_force_graver(
    basis: LatticeBasis, bound: int, *, node_cap: int = DEFAULT_NODE_CAP
) -> "GraverSet":
    """All Graver basis elements with infinity norm at most ``bound``.

    Walks integer combinations of the Hermite rows of the basis depth first,
    collecting every nonzero lattice point in the ball.  After choosing the
    coefficient of row i, every coordinate left of the next pivot is final,
    so those coordinates prune exactly.  A conformal divisor never increases
    any |coordinate|, so the ball is self-contained: scanning the points in
    ascending L1 order and dropping those dominated by an already kept point
    leaves exactly the conformally minimal ones.  Every survivor is then
    re-certified by ``is_graver_element``, which decides minimality by the
    entirely separate box-membership procedure.
    """
    from .engine_pottier import GraverSet

    bound = int(bound)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rows = [list(r) for r in basis._hnf]
    pivots = list(basis._pivot_cols)
    n = basis.n
    out = GraverSet(n, closed_under_negation=True)
    if not rows:
        return out
    nodes = 0
    points: list[tuple[int, ...]] = []

    def walk(i: int, partial: list[int]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise ResourceLimitError(f"coefficient search exceeded {node_cap} nodes")
        if i == len(rows):
            v = tuple(partial)
            if not is_zero(v) and max(abs(x) for x in v) <= bound:
                points.append(v)
            return
        p = pivots[i]
        a = rows[i][p]  # positive by Hermite form
        lo = -((bound + partial[p]) // a)
        hi = (bound - partial[p]) // a
        limit = pivots[i + 1] if i + 1 < len(rows) else n
        for c in range(lo, hi + 1):
            nxt = [x + c * y for x, y in zip(partial, rows[i])]
            # Coordinates before the next pivot are final once row i is set.
            if all(abs(nxt[j]) <= bound for j in range(limit)):
                walk(i + 1, nxt)

    walk(0, [0] * n)
    points.sort(key=lambda v: (sum(abs(x) for x in v), v))
    kept = np.empty((len(points), n), dtype=np.int64)
    stored = 0
    for v in points:
        arr = np.fromiter(v, dtype=np.int64, count=n)
        if stored:
            k = kept[:stored]
            dominated = (((k <= 0) | (arr >= k)) & ((k >= 0) | (arr <= k))).all(axis=1).any()
            if dominated:
                continue
        # Any dominator of v would be a minimal ball point of smaller L1
        # norm, hence already kept; v itself must pass the box test.
        assert is_graver_element(v, basis)
        kept[stored] = arr
        stored += 1
        out.add(v)
    assert all(tuple(-x for x in v) in out for v in out.vectors)
    return out
