"""Problem generators: multiway contingency-table lattices and their symmetry
groups.

Cells of a k_1 x ... x k_m table are numbered row-major (last axis fastest).
The constraint matrix fixes all axis-parallel line sums, so its kernel is
the lattice of integer tables whose line sums all vanish.
"""

from __future__ import annotations

from itertools import product
from math import prod

from .errors import ResourceLimitError, ValidationError
from .symmetry import Permutation, PermutationGroup
from .vectors import IntVector

DEFAULT_CELL_CAP = 10**6


def _check_dims(dims) -> tuple[int, ...]:
    dims = tuple(int(k) for k in dims)
    if len(dims) < 2:
        raise ValidationError("a table needs at least two axes")
    if any(k < 2 for k in dims):
        raise ValidationError("every table axis needs at least two levels")
    return dims


def _strides(dims: tuple[int, ...]) -> list[int]:
    return [prod(dims[a + 1 :]) for a in range(len(dims))]


def table_matrix(dims, *, cell_cap: int = DEFAULT_CELL_CAP) -> list[IntVector]:
    """0/1 line-sum constraint matrix of an m-way table.

    One block of rows per free axis, blocks emitted for the last axis first;
    within a block the fixed coordinates run in row-major order.  For a
    3 x 3 table this yields the three row-sum rows followed by the three
    column-sum rows.
    """
    dims = _check_dims(dims)
    n = prod(dims)
    if n > cell_cap:
        raise ResourceLimitError(f"table has {n} cells, more than the cap {cell_cap}")
    strides = _strides(dims)
    m = len(dims)
    rows: list[IntVector] = []
    for free in range(m - 1, -1, -1):
        fixed = [a for a in range(m) if a != free]
        for assign in product(*(range(dims[a]) for a in fixed)):
            base = sum(i * strides[a] for a, i in zip(fixed, assign))
            row = [0] * n
            for t in range(dims[free]):
                row[base + t * strides[free]] = 1
            rows.append(tuple(row))
    return rows


def _cell_permutation(dims: tuple[int, ...], image_of_index) -> Permutation:
    """Cell permutation induced by a map on multi-indices."""
    n = prod(dims)
    strides = _strides(dims)
    images = []
    for cell in range(n):
        rest = cell
        idx = []
        for s in strides:
            idx.append(rest // s)
            rest %= s
        target = image_of_index(idx)
        images.append(sum(i * s for i, s in zip(target, strides)) + 1)
    return Permutation(tuple(images))


def table_group(dims) -> PermutationGroup:
    """Generators of the symmetry group of the table lattice.

    Per axis: the label transposition (1 2) and, for three or more levels,
    the full label cycle.  Axes of equal size may additionally be swapped;
    consecutive members of each equal-size class give generating swaps.
    """
    dims = _check_dims(dims)
    n = prod(dims)
    gens: list[Permutation] = []
    for a, k in enumerate(dims):

        def transpose(idx, a=a):
            out = list(idx)
            if out[a] == 0:
                out[a] = 1
            elif out[a] == 1:
                out[a] = 0
            return out

        gens.append(_cell_permutation(dims, transpose))
        if k >= 3:

            def cycle(idx, a=a, k=k):
                out = list(idx)
                out[a] = (out[a] + 1) % k
                return out

            gens.append(_cell_permutation(dims, cycle))
    classes: dict[int, list[int]] = {}
    for a, k in enumerate(dims):
        classes.setdefault(k, []).append(a)
    for axes in classes.values():
        for a, b in zip(axes, axes[1:]):

            def swap(idx, a=a, b=b):
                out = list(idx)
                out[a], out[b] = out[b], out[a]
                return out

            gens.append(_cell_permutation(dims, swap))
    return PermutationGroup(n, gens)
