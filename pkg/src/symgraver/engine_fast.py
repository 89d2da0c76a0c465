"""Norm-ordered completion over a conformally minimal seed set.

The seed is a lift of the Graver basis of the projected lattice (see
``lattice.minimal_projected_generators``), so every stored vector is
already conformally minimal in the full lattice.  Candidates are processed
in nondecreasing prefix norm, where the prefix norm is the L1 norm of the
first d coordinates: on a pivoted basis projection is injective, so this
is a genuine norm on the lattice and sums of prefix-sign-compatible pairs
have additive norms.  One conformal-dominance test per candidate decides
membership, and the output is exactly the Graver basis with no final
minimality filter.
"""

from __future__ import annotations

from typing import Sequence

from .engine_pottier import GraverSet, PairQueue, batch_map, batch_size
from .errors import ValidationError
from .lattice import InputSetFbar, LatticeBasis
from .vectors import IntVector, is_zero, prefix_norm, same_orthant_prefix, vec_add, zero_vector


def fast_normal_form(s: Sequence[int], gset: GraverSet) -> IntVector:
    """Zero when some stored vector conforms to s, else s unchanged.

    For norm-ordered completion this one-shot test is equivalent to full
    iterated reduction: any single conforming reducer already certifies that
    s is not conformally minimal, and candidates arrive smallest first.
    """
    s = tuple(int(x) for x in s)
    return zero_vector(len(s)) if gset.first_conforming(s) >= 0 else s


def fast_graver(
    fbar: InputSetFbar,
    basis: LatticeBasis,
    *,
    threads: int = 1,
    backend=None,
    popped_norms: list | None = None,
) -> GraverSet:
    """Graver basis of the lattice, seeded by the lifted projected basis.

    Only pairs whose leading d coordinates have no sign conflict are queued:
    a conflicting pair's sum has a conformal certificate among vectors
    already known.  Pops come in nondecreasing prefix norm, asserted at run
    time; ``popped_norms`` (if given) records the processed sequence.
    """
    if not basis.pivoted:
        raise ValidationError("fast_graver requires a pivoted basis")
    d = basis.d
    G = GraverSet(basis.n, fbar.vectors, backend=backend)
    queue = PairQueue(ordered=True)
    base = list(G.vectors)
    for i in range(len(base)):
        for j in range(i, len(base)):
            if same_orthant_prefix(base[i], base[j], d):
                s = vec_add(base[i], base[j])
                if not is_zero(s):
                    queue.push(s, key=prefix_norm(s, d))
    size = batch_size(threads)
    last = 0
    while queue:
        batch = queue.pop_many(size)
        frozen = len(G)
        results = batch_map(threads, lambda e: G.first_conforming(e[1], count=frozen), batch)
        for k, (key, s, _) in enumerate(batch):
            assert key >= last  # candidates leave the queue smallest first
            last = key
            if popped_norms is not None:
                popped_norms.append(key)
            if results[k] >= 0:
                continue
            G.add(s)
            for g in list(G.vectors):
                if same_orthant_prefix(s, g, d):
                    t = vec_add(s, g)
                    if not is_zero(t):
                        queue.push(t, key=prefix_norm(t, d))
            queue.requeue(batch[k + 1 :])
            break
    return G
