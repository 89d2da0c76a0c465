"""Representative-based completion: one stored vector per group orbit.

When the symmetry group maps the lattice onto itself, the Graver basis is a
union of full orbits, so the completion can queue and store canonical orbit
representatives only.  Normal forms are still taken against the materialised
union of the stored orbits (the expansion), which keeps reduction exact
while shrinking the queue by roughly the average orbit size.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .engine_pottier import GraverSet, PairQueue, batch_map, batch_size
from .errors import DimensionError
from .symmetry import DEFAULT_ORBIT_CAP, PermutationGroup, orbit
from .vectors import IntVector, is_zero, vec_add, vec_neg

_CANON_CHUNK = 16384


class OrbitIndex:
    """Canonical representatives plus the materialised union of their orbits.

    Canonicalisation gathers each vector through the full group element
    matrix in one kernel call, returning the lexicographically least image,
    the least image attaining the minimal prefix norm, and that norm.
    Orbit rows are deduplicated and lex-sorted, so expansion contents and
    order are identical across kernel backends.
    """

    def __init__(
        self,
        group: PermutationGroup,
        dim: int,
        d: int,
        *,
        backend=None,
        cap: int = DEFAULT_ORBIT_CAP,
    ):
        if group.degree != dim:
            raise DimensionError(f"group degree {group.degree} does not match dimension {dim}")
        self._images = group.element_images(cap)
        self.d = d
        self.expansion = GraverSet(dim, backend=backend)
        self.reps: list[IntVector] = []
        self.orbit_rows: list[np.ndarray] = []
        self.sizes: list[int] = []
        self._rep_seen: set[IntVector] = set()

    def canonicalize(self, vecs: Sequence[IntVector]) -> list[tuple[IntVector, IntVector, int]]:
        """(canonical form, minimal-norm member, orbit prefix norm) per vector."""
        out: list[tuple[IntVector, IntVector, int]] = []
        backend = self.expansion.backend
        for start in range(0, len(vecs), _CANON_CHUNK):
            chunk = vecs[start : start + _CANON_CHUNK]
            arr = np.array(chunk, dtype=np.int64)
            canon = np.empty_like(arr)
            sel = np.empty_like(arr)
            norms = np.empty(len(chunk), dtype=np.int64)
            backend.canonical_batch(self._images, arr, self.d, canon, sel, norms)
            out.extend(
                (
                    tuple(int(x) for x in canon[i]),
                    tuple(int(x) for x in sel[i]),
                    int(norms[i]),
                )
                for i in range(len(chunk))
            )
        return out

    def has_rep(self, canon: IntVector) -> bool:
        return canon in self._rep_seen

    def add_rep(self, canon: IntVector) -> None:
        """Store a new representative and append its whole orbit to the
        expansion (unique rows, lex order)."""
        arr = np.fromiter(canon, dtype=np.int64, count=len(canon))
        rows = np.unique(arr[self._images], axis=0)
        for row in rows:
            self.expansion.add(tuple(int(x) for x in row))
        self.reps.append(canon)
        self.orbit_rows.append(rows)
        self.sizes.append(rows.shape[0])
        self._rep_seen.add(canon)


def canonical_forms(
    group: PermutationGroup,
    vecs: Sequence[IntVector],
    *,
    d: int = 0,
    backend=None,
    cap: int = DEFAULT_ORBIT_CAP,
) -> list[IntVector]:
    """Lexicographically least orbit member of each vector, via the kernels."""
    if not vecs:
        return []
    index = OrbitIndex(group, len(vecs[0]), d, backend=backend, cap=cap)
    return [canon for canon, _, _ in index.canonicalize(list(vecs))]


def initial_pair_sums(vectors: Sequence[IntVector], raw_seen: set[IntVector]) -> list[IntVector]:
    """All pairwise sums (unordered, with repetition) over the given vectors."""
    sums: list[IntVector] = []
    for i in range(len(vectors)):
        for j in range(i, len(vectors)):
            s = vec_add(vectors[i], vectors[j])
            if not is_zero(s) and s not in raw_seen:
                raw_seen.add(s)
                sums.append(s)
    return sums


def rep_pair_sums(store: OrbitIndex, new_rep: IntVector, raw_seen: set[IntVector]) -> list[IntVector]:
    """Sums of the new representative's orbit against every stored orbit.

    Only the smaller side of each pair is enumerated: summing a fixed orbit
    member against the full orbit of the other side reaches the same set of
    orbits, because the two double unions coincide under the group action.
    """
    fi = len(store.reps) - 1
    f_arr = np.fromiter(new_rep, dtype=np.int64, count=len(new_rep))
    sums: list[IntVector] = []
    for gi in range(len(store.reps)):
        if store.sizes[gi] <= store.sizes[fi]:
            block = store.orbit_rows[gi] + f_arr
        else:
            g_arr = np.fromiter(store.reps[gi], dtype=np.int64, count=len(new_rep))
            block = store.orbit_rows[fi] + g_arr
        for row in block:
            t = tuple(int(x) for x in row)
            if not is_zero(t) and t not in raw_seen:
                raw_seen.add(t)
                sums.append(t)
    return sums


def push_canonical(store: OrbitIndex, queue: PairQueue, sums: Sequence[IntVector], ordered: bool) -> None:
    for canon, sel, norm in store.canonicalize(list(sums)):
        if ordered:
            queue.push(canon, key=norm, payload=sel)
        else:
            queue.push(canon)


def check_expansion_invariant(store: OrbitIndex, group: PermutationGroup) -> None:
    """Recompute the orbit union independently (BFS closure) and compare."""
    expect: set[IntVector] = set()
    for rep in store.reps:
        expect |= orbit(rep, group)
    assert expect == set(store.expansion.vectors)


def sym_pottier(
    F,
    group: PermutationGroup,
    *,
    threads: int = 1,
    backend=None,
    check_invariants: bool = False,
    cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[GraverSet, tuple[IntVector, ...]]:
    """Baseline completion at orbit granularity.

    Requires the group to map the lattice spanned by F onto itself (see
    ``symmetry.verify_invariance``).  Returns the expansion, whose
    conformally minimal members form the Graver basis exactly as in the
    unsymmetrised engine, together with the stored representatives.
    """
    vecs = [tuple(int(x) for x in v) for v in F]
    vecs = [v for v in vecs if not is_zero(v)]
    n = group.degree
    for v in vecs:
        if len(v) != n:
            raise DimensionError(f"vector length {len(v)} does not match group degree {n}")
    store = OrbitIndex(group, n, 0, backend=backend, cap=cap)
    init = vecs + [vec_neg(v) for v in vecs]
    for canon, _, _ in store.canonicalize(init):
        if not store.has_rep(canon):
            store.add_rep(canon)
    queue = PairQueue()
    raw_seen: set[IntVector] = set()
    push_canonical(store, queue, initial_pair_sums(list(store.expansion.vectors), raw_seen), False)
    size = batch_size(threads)
    while queue:
        batch = queue.pop_many(size)
        frozen = len(store.expansion)
        results = batch_map(
            threads, lambda e: store.expansion.reduce(e[1], count=frozen), batch
        )
        for k, entry in enumerate(batch):
            residue = results[k][0]
            if is_zero(residue):
                continue
            canon = store.canonicalize([residue])[0][0]
            # The residue's whole orbit is irreducible, so its representative
            # cannot already be stored.
            assert not store.has_rep(canon)
            store.add_rep(canon)
            if check_invariants:
                check_expansion_invariant(store, group)
            push_canonical(store, queue, rep_pair_sums(store, canon, raw_seen), False)
            queue.requeue(batch[k + 1 :])
            break
    return store.expansion, tuple(store.reps)
