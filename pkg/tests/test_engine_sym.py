"""Orbit-granularity baseline completion and its orbit index machinery."""

from __future__ import annotations

import random

import numpy as np
import pytest

from symgraver import (
    DimensionError,
    apply,
    canonical_rep,
    extract_minimal,
    kernel_lattice,
    orbit,
    pottier_graver,
    sym_pottier,
    table_group,
    table_matrix,
    up_to_sign,
)
from symgraver.engine_sym import (
    OrbitIndex,
    canonical_forms,
    initial_pair_sums,
    rep_pair_sums,
)
from symgraver.vectors import vec_add

from conftest import random_bases, trivial_group
from data import GRAVER_3X3_UP_TO_SIGN


def test_canonicalize_matches_orbit_minimum():
    rng = random.Random(24601)
    group = table_group((3, 3))
    index = OrbitIndex(group, 9, 4)
    vecs = [tuple(rng.randint(-2, 2) for _ in range(9)) for _ in range(40)]
    for v, (canon, sel, norm) in zip(vecs, index.canonicalize(vecs)):
        rec = canonical_rep(v, group, d=4)
        assert canon == rec.canonical
        assert norm == rec.min_prefix_norm
        # sel is the lex-least orbit member attaining the minimal prefix norm
        orb = orbit(v, group)
        attainers = [u for u in orb if sum(abs(x) for x in u[:4]) == norm]
        assert sel == min(attainers)


def test_canonical_forms_helper():
    group = table_group((3, 3))
    vecs = list(GRAVER_3X3_UP_TO_SIGN[:5])
    forms = canonical_forms(group, vecs)
    assert forms == [min(orbit(v, group)) for v in vecs]
    assert canonical_forms(group, []) == []


def test_add_rep_materialises_whole_orbit():
    group = table_group((3, 3))
    index = OrbitIndex(group, 9, 0)
    v = (1, -1, 0, -1, 1, 0, 0, 0, 0)
    canon = min(orbit(v, group))
    assert not index.has_rep(canon)
    index.add_rep(canon)
    assert index.has_rep(canon)
    assert index.sizes == [18]
    assert set(index.expansion.vectors) == orbit(v, group)
    # expansion rows arrive lex sorted, so runs are backend independent
    assert index.expansion.vectors == sorted(index.expansion.vectors)


def test_orbit_index_degree_check():
    with pytest.raises(DimensionError):
        OrbitIndex(table_group((3, 3)), 4, 0)


def test_initial_pair_sums_dedup():
    seen: set = set()
    sums = initial_pair_sums([(1, 0), (-1, 0), (0, 1)], seen)
    # (1,0)+(-1,0) vanishes; the other five unordered pairs survive
    assert sorted(sums) == [(-2, 0), (-1, 1), (0, 2), (1, 1), (2, 0)]
    assert initial_pair_sums([(1, 0), (1, 0)], seen) == []  # already seen


def test_rep_pair_sums_cover_both_orbit_expansions():
    # enumerating only the smaller orbit against the other representative
    # must reach exactly the orbits of the full double union
    group = table_group((2, 2))
    index = OrbitIndex(group, 4, 0)
    f = min(orbit((1, -1, -1, 1), group))
    g = min(orbit((1, 0, 0, 0), group))
    index.add_rep(f)
    index.add_rep(g)
    sums = rep_pair_sums(index, g, set())
    full = {
        vec_add(u, w)
        for u in orbit(f, group)
        for w in orbit(g, group)
    } | {vec_add(u, w) for u in orbit(g, group) for w in orbit(g, group)}
    full.discard((0, 0, 0, 0))
    assert set(canonical_forms(group, sorted(sums))) == set(canonical_forms(group, sorted(full)))


def test_sym_pottier_three_by_three_table():
    basis = kernel_lattice(table_matrix((3, 3)))
    group = table_group((3, 3))
    expansion, reps = sym_pottier(basis.generators, group, check_invariants=True)
    minimal = extract_minimal(expansion)
    assert up_to_sign(minimal.vectors) == GRAVER_3X3_UP_TO_SIGN
    # every stored representative is canonical and the orbits are disjoint
    seen: set = set()
    for rep in reps:
        orb = orbit(rep, group)
        assert rep == min(orb)
        assert not (orb & seen)
        seen |= orb
    assert seen == set(expansion.vectors)


def test_sym_pottier_expansion_is_group_closed():
    basis = kernel_lattice(table_matrix((3, 3)))
    group = table_group((3, 3))
    expansion, _ = sym_pottier(basis.generators, group)
    members = set(expansion.vectors)
    for sigma in group.generators:
        assert all(apply(sigma, v) in members for v in members)


def test_sym_pottier_trivial_group_matches_baseline():
    for basis in random_bases(8, seed=555):
        expected = up_to_sign(extract_minimal(pottier_graver(basis.generators)).vectors)
        expansion, reps = sym_pottier(basis.generators, trivial_group(basis.n))
        assert up_to_sign(extract_minimal(expansion).vectors) == expected
        assert len(reps) == len(expansion)  # singleton orbits


def test_sym_pottier_degree_mismatch():
    with pytest.raises(DimensionError):
        sym_pottier([(1, 1)], table_group((2, 2)))


def test_sym_pottier_threads_are_byte_identical():
    basis = kernel_lattice(table_matrix((3, 3)))
    group = table_group((3, 3))
    seq = sym_pottier(basis.generators, group, threads=1)
    par = sym_pottier(basis.generators, group, threads=4)
    assert seq[0].vectors == par[0].vectors
    assert seq[1] == par[1]


def test_empty_input():
    expansion, reps = sym_pottier([], trivial_group(3))
    assert len(expansion) == 0 and reps == ()
    assert np.array(expansion.vectors).size == 0
