"""Shared test fixtures: independent mini-oracles and instance generators.

The helpers here deliberately reimplement small pieces of the package in
the most naive way possible (Fraction elimination, tuple BFS, direct scans)
so tests compare two unrelated routes to the same answer.
"""

from __future__ import annotations

import random
from fractions import Fraction

from symgraver import (
    LatticeBasis,
    PermutationGroup,
    conjugate,
    extract_minimal,
    fast_graver,
    minimal_projected_generators,
    pottier_graver,
    preprocess,
    sym_fast_graver,
    sym_pottier,
    to_original_coords,
    up_to_sign,
)

# ---------------------------------------------------------------------------
# independent mini-oracles


def rational_rank(rows) -> int:
    """Row rank over Q by plain Fraction elimination."""
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        hit = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if hit is None:
            continue
        mat[rank], mat[hit] = mat[hit], mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col] != 0:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def rational_det(rows) -> Fraction:
    """Determinant over Q by Fraction elimination."""
    mat = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(len(mat)):
        hit = next((i for i in range(col, len(mat)) if mat[i][col] != 0), None)
        if hit is None:
            return Fraction(0)
        if hit != col:
            mat[col], mat[hit] = mat[hit], mat[col]
            det = -det
        det *= mat[col][col]
        for i in range(col + 1, len(mat)):
            if mat[i][col] != 0:
                f = mat[i][col] / mat[col][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return det


def conforms_naive(u, v) -> bool:
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(u, v))


def closure_naive(v, perms) -> set:
    """Orbit of v under 1-based image tuples, by worklist closure."""
    seen = {tuple(v)}
    todo = [tuple(v)]
    while todo:
        cur = todo.pop()
        for images in perms:
            nxt = tuple(cur[i - 1] for i in images)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


# ---------------------------------------------------------------------------
# randomized instances


def random_bases(count: int, seed: int) -> list[LatticeBasis]:
    """Small random lattices: rank <= 3, dimension <= 7, entries in [-2, 2]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, 3)
        n = rng.randint(max(d, 2), 7)
        rows = [
            tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(d)
        ]
        rows = [r for r in rows if any(r)]
        if not rows:
            continue
        basis = LatticeBasis.from_generators(rows, n)
        if basis.d == 0:
            continue
        out.append(basis)
    return out


def trivial_group(n: int) -> PermutationGroup:
    return PermutationGroup(n, [])


def graver_four_ways(basis: LatticeBasis, group: PermutationGroup | None = None, **kw) -> dict:
    """Final Graver basis from all four engines, canonicalised to sorted
    up-to-sign vectors in original coordinates."""
    if group is None:
        group = trivial_group(basis.n)
    out = {}
    out["pottier"] = up_to_sign(extract_minimal(pottier_graver(basis.generators, **kw)).vectors)
    expansion, _ = sym_pottier(basis.generators, group, **kw)
    out["sym-pottier"] = up_to_sign(extract_minimal(expansion).vectors)
    pivoted = preprocess(basis)
    fbar = minimal_projected_generators(pivoted)
    out["fast"] = up_to_sign(
        to_original_coords(v, pivoted) for v in fast_graver(fbar, pivoted, **kw).vectors
    )
    wgroup = PermutationGroup(
        basis.n, [conjugate(g, pivoted.column_perm) for g in group.generators]
    )
    expansion, _ = sym_fast_graver(fbar, wgroup, pivoted, **kw)
    out["sym-fast"] = up_to_sign(to_original_coords(v, pivoted) for v in expansion.vectors)
    return out
