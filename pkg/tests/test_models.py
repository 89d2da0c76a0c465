"""Multiway-table generators: constraint matrices and symmetry groups."""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from symgraver import (
    ResourceLimitError,
    ValidationError,
    kernel_lattice,
    table_group,
    table_matrix,
    verify_invariance,
)

from data import TABLE_3X3_MATRIX


def test_three_by_three_matrix_is_frozen():
    assert list(table_matrix((3, 3))) == TABLE_3X3_MATRIX


def test_row_and_column_structure():
    for dims in [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, 4)]:
        mat = table_matrix(dims)
        n = 1
        for k in dims:
            n *= k
        expected_rows = sum(n // k for k in dims)
        assert len(mat) == expected_rows
        assert all(len(r) == n for r in mat)
        # every row is an indicator of one line, every cell sits on one
        # line per axis
        for free, k in enumerate(dims):
            assert sum(1 for r in mat if sum(r) == k) >= n // k
        cols = np.array(mat).sum(axis=0)
        assert all(c == len(dims) for c in cols)


def test_rows_are_axis_marginals():
    rng = random.Random(4096)
    for dims in [(2, 3), (3, 3), (2, 2, 3)]:
        mat = table_matrix(dims)
        cells = [rng.randint(-9, 9) for _ in range(len(mat[0]))]
        tensor = np.array(cells).reshape(dims)
        got = [sum(a * x for a, x in zip(row, cells)) for row in mat]
        expected = []
        for free in range(len(dims) - 1, -1, -1):
            summed = tensor.sum(axis=free)
            expected.extend(int(x) for x in summed.flatten())
        assert got == expected


def test_every_line_appears_exactly_once():
    dims = (2, 3, 4)
    n = 24
    mat = table_matrix(dims)
    supports = [tuple(j for j, x in enumerate(row) if x) for row in mat]
    assert len(set(supports)) == len(mat)
    # rows come in one block per free axis (last axis first); the lines of
    # each block partition the cells
    start = 0
    for free in range(len(dims) - 1, -1, -1):
        block = supports[start : start + n // dims[free]]
        start += len(block)
        covered = sorted(itertools.chain.from_iterable(block))
        assert covered == list(range(n))
        assert all(len(s) == dims[free] for s in block)
    assert start == len(mat)


def test_group_orders_closed_form():
    # product of per-axis factorials, times the permutations of equal axes
    assert table_group((2, 2)).order() == 2 * 2 * 2
    assert table_group((2, 3)).order() == 2 * 6
    assert table_group((2, 2, 3)).order() == 2 * 2 * 6 * 2
    assert table_group((2, 3, 4)).order() == 2 * 6 * 24
    assert table_group((3, 4, 4)).order() == 6 * 24 * 24 * 2


def test_group_preserves_kernel_lattice():
    for dims in [(2, 2), (2, 3), (3, 3), (2, 2, 2), (3, 3, 3)]:
        basis = kernel_lattice(table_matrix(dims))
        assert verify_invariance(table_group(dims), basis)


def test_group_generators_permute_marginal_rows():
    # relabelling cells by a group element permutes the constraint rows
    for dims in [(2, 3), (3, 3), (2, 2, 2)]:
        mat = table_matrix(dims)
        rows = set(mat)
        for sigma in table_group(dims).generators:
            assert {sigma.apply(r) for r in rows} == rows


def test_dims_validation():
    with pytest.raises(ValidationError):
        table_matrix((3,))
    with pytest.raises(ValidationError):
        table_matrix((1, 3))
    with pytest.raises(ValidationError):
        table_group(())
    with pytest.raises(ValidationError):
        table_group((2, 0))


def test_cell_cap():
    with pytest.raises(ResourceLimitError):
        table_matrix((100, 100, 100), cell_cap=10**5)
