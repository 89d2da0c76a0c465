"""Norm-ordered completion at orbit granularity.

Combines the two speedups: candidates are queued one representative per
orbit and processed in nondecreasing orbit norm (the minimal prefix norm
over the orbit), and a single conformal-dominance test against the
materialised expansion decides membership.  Accepted orbits enter the
output whole, and the expansion is exactly the Graver basis on
termination; no final minimality filter runs.

The reduction target for a popped orbit is its minimal-norm member (lex
least among the attainers), not the lexicographic representative: the
dominance test needs a vector realising the key the queue sorted on.
Unlike the unsymmetrised norm-ordered engine there is no leading-sign pair
filter, and popped orbit norms are not asserted monotone: queued keys are
norms of orbit members while reducers come from whole orbits, so the
sequential argument does not transfer verbatim.
"""

from __future__ import annotations

from .engine_pottier import GraverSet, PairQueue, batch_map, batch_size
from .engine_sym import (
    OrbitIndex,
    check_expansion_invariant,
    initial_pair_sums,
    push_canonical,
    rep_pair_sums,
)
from .errors import DimensionError, ValidationError
from .lattice import InputSetFbar, LatticeBasis
from .symmetry import DEFAULT_ORBIT_CAP, PermutationGroup
from .vectors import IntVector, is_zero


def sym_fast_graver(
    fbar: InputSetFbar,
    group: PermutationGroup,
    basis: LatticeBasis,
    *,
    threads: int = 1,
    backend=None,
    check_invariants: bool = False,
    cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[GraverSet, tuple[IntVector, ...]]:
    """Graver basis as full orbits over a conformally minimal seed.

    The group must act on working coordinates (conjugate it through
    ``column_perm`` when the basis was preprocessed) and map the lattice
    onto itself.  Returns the expansion (exactly the Graver basis) and the
    stored representatives.
    """
    if not basis.pivoted:
        raise ValidationError("sym_fast_graver requires a pivoted basis")
    if group.degree != basis.n:
        raise DimensionError(
            f"group degree {group.degree} does not match lattice dimension {basis.n}"
        )
    store = OrbitIndex(group, basis.n, basis.d, backend=backend, cap=cap)
    for canon, _, _ in store.canonicalize(list(fbar.vectors)):
        if not store.has_rep(canon):
            store.add_rep(canon)
    queue = PairQueue(ordered=True)
    raw_seen: set[IntVector] = set()
    push_canonical(store, queue, initial_pair_sums(list(store.expansion.vectors), raw_seen), True)
    size = batch_size(threads)
    while queue:
        batch = queue.pop_many(size)
        frozen = len(store.expansion)
        results = batch_map(
            threads, lambda e: store.expansion.first_conforming(e[2], count=frozen), batch
        )
        for k, (_, canon, sel) in enumerate(batch):
            if results[k] >= 0:
                continue
            # No expansion member conforms to the minimal-norm orbit member,
            # so the whole orbit consists of new Graver elements.
            assert not store.has_rep(canon)
            store.add_rep(canon)
            if check_invariants:
                check_expansion_invariant(store, group)
            push_canonical(store, queue, rep_pair_sums(store, canon, raw_seen), True)
            queue.requeue(batch[k + 1 :])
            break
    return store.expansion, tuple(store.reps)
