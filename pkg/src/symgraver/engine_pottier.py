"""Baseline completion engine over signed generating sets.

Seed the set with F and -F, queue all pairwise sums, and repeatedly pop a
candidate, reduce it to an iterated normal form against the current set,
and keep nonzero residues (queueing their sums with everything stored).
On termination the set contains the whole Graver basis of the lattice
generated by F; ``extract_minimal`` filters it down to exactly the
conformally minimal elements.
"""

from __future__ import annotations

import heapq
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DimensionError, FixedWidthOverflowError
from .vectors import IntVector, is_zero, vec_add, vec_neg

_INITIAL_CAPACITY = 64


class GraverSet:
    """Insertion-ordered, deduplicated vector set with a packed reducer index.

    Members are mirrored into a C-contiguous int64 buffer with per-row sign
    bitmasks, so conformal-dominance scans and iterated reduction run inside
    the kernel backend.  Entries beyond the packed range raise
    ``FixedWidthOverflowError`` rather than wrapping.  The zero vector is
    never stored: it conforms to everything and would wedge reduction.
    """

    def __init__(
        self,
        dim: int,
        vectors: Iterable[Sequence[int]] = (),
        *,
        closed_under_negation: bool = False,
        backend=None,
    ):
        self.dim = int(dim)
        self.closed_under_negation = closed_under_negation
        self.backend = backend if backend is not None else kernels.get_backend()
        self.vectors: list[IntVector] = []
        self._seen: set[IntVector] = set()
        self._rows = np.zeros((_INITIAL_CAPACITY, max(self.dim, 1)), dtype=np.int64)
        self._pos = np.zeros(_INITIAL_CAPACITY, dtype=np.uint64)
        self._neg = np.zeros(_INITIAL_CAPACITY, dtype=np.uint64)
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._seen

    def add(self, v: Sequence[int]) -> bool:
        """Store v unless it is zero or already present."""
        v = tuple(int(x) for x in v)
        if len(v) != self.dim:
            raise DimensionError(f"vector length {len(v)} does not match dimension {self.dim}")
        if is_zero(v) or v in self._seen:
            return False
        for x in v:
            if x > kernels.ENTRY_LIMIT or x < -kernels.ENTRY_LIMIT:
                raise FixedWidthOverflowError(f"entry {x} exceeds the packed fast-path range")
        i = len(self.vectors)
        if i == self._rows.shape[0]:
            self._grow()
        self._rows[i] = v
        self._pos[i], self._neg[i] = kernels.sign_masks(v)
        self.vectors.append(v)
        self._seen.add(v)
        return True

    def update(self, vs: Iterable[Sequence[int]]) -> None:
        for v in vs:
            self.add(v)

    def _grow(self) -> None:
        cap = self._rows.shape[0] * 2
        rows = np.zeros((cap, self._rows.shape[1]), dtype=np.int64)
        rows[: len(self.vectors)] = self._rows[: len(self.vectors)]
        self._rows = rows
        self._pos = np.resize(self._pos, cap)
        self._neg = np.resize(self._neg, cap)

    def first_conforming(self, s: Sequence[int], *, skip: int = -1, count: int | None = None) -> int:
        """Index of the first stored vector conforming to s, or -1.

        ``count`` freezes the view to the first ``count`` members, which lets
        concurrent callers scan a stable snapshot while the set grows.
        """
        c = len(self.vectors) if count is None else count
        s_arr = kernels.pack_vector(s)
        sp, sn = kernels.sign_masks(s)
        return int(
            self.backend.first_conforming(self._rows, self._pos, self._neg, c, s_arr, sp, sn, skip)
        )

    def reduce(self, s: Sequence[int], *, count: int | None = None) -> tuple[IntVector, list[int]]:
        """Iterated normal form of s against the stored vectors.

        Repeatedly subtracts the first conforming member (insertion order)
        until none conforms.  Returns the residue and the chain of reducer
        indices; the chain length is bounded by the L1 norm of s, since each
        subtraction removes at least one unit.
        """
        c = len(self.vectors) if count is None else count
        s_arr = kernels.pack_vector(s)
        chain = np.empty(int(sum(abs(int(x)) for x in s)) + 1, dtype=np.int64)
        length = int(self.backend.reduce_iterated(self._rows, self._pos, self._neg, c, s_arr, chain))
        if length < 0:
            raise FixedWidthOverflowError("reduction chain exceeded its L1 budget")
        return tuple(int(x) for x in s_arr), [int(r) for r in chain[:length]]

    def max_inf_norm(self) -> int:
        return max((abs(x) for v in self.vectors for x in v), default=0)


class PairQueue:
    """Queue of candidate vectors: FIFO by default, smallest key first when
    ordered.

    Vectors are deduplicated for the queue's lifetime and zero is rejected,
    so every candidate is examined at most once per run.  Heap ties on the
    key break by vector lexicographic order, keeping pops deterministic.
    """

    def __init__(self, ordered: bool = False):
        self.ordered = ordered
        self._fifo: deque = deque()
        self._heap: list = []
        self._seen: set[IntVector] = set()

    def push(self, vec: IntVector, key: int | None = None, payload=None) -> bool:
        if is_zero(vec) or vec in self._seen:
            return False
        self._seen.add(vec)
        if self.ordered:
            heapq.heappush(self._heap, (key, vec, payload))
        else:
            self._fifo.append((key, vec, payload))
        return True

    def pop_many(self, k: int) -> list[tuple]:
        out = []
        if self.ordered:
            while self._heap and len(out) < k:
                out.append(heapq.heappop(self._heap))
        else:
            while self._fifo and len(out) < k:
                out.append(self._fifo.popleft())
        return out

    def requeue(self, entries: Sequence[tuple]) -> None:
        """Put popped-but-unprocessed entries back, preserving their order."""
        if self.ordered:
            for e in entries:
                heapq.heappush(self._heap, e)
        else:
            self._fifo.extendleft(reversed(entries))

    def __len__(self) -> int:
        return len(self._heap) + len(self._fifo)

    def __bool__(self) -> bool:
        return bool(self._heap) or bool(self._fifo)


def normal_form(s: Sequence[int], gset: GraverSet) -> IntVector:
    """Iterated normal form of s against gset (insertion-order reducers)."""
    residue, _ = gset.reduce(tuple(int(x) for x in s))
    return residue


def batch_map(threads: int, fn: Callable, items: Sequence) -> list:
    """Order-preserving map, threaded when requested.

    Callers batch queue pops, scan them concurrently against a frozen
    snapshot of the reducer index, then apply results serially in pop order
    and requeue everything after the first state change.  That makes the
    threaded run byte-identical to the sequential one.
    """
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))


def batch_size(threads: int) -> int:
    return 1 if threads <= 1 else 64 * threads


def pottier_graver(F: Iterable[Sequence[int]], *, threads: int = 1, backend=None) -> GraverSet:
    """Complete F to a superset of the Graver basis of the lattice it spans.

    The output needs ``extract_minimal``: completion guarantees every Graver
    element is present but may retain reducible intermediates.
    """
    vecs = [tuple(int(x) for x in v) for v in F]
    vecs = [v for v in vecs if not is_zero(v)]
    if not vecs:
        return GraverSet(0, backend=backend)
    G = GraverSet(len(vecs[0]), backend=backend)
    for v in vecs:
        G.add(v)
        G.add(vec_neg(v))
    queue = PairQueue()
    base = list(G.vectors)
    for i in range(len(base)):
        for j in range(i, len(base)):
            queue.push(vec_add(base[i], base[j]))
    size = batch_size(threads)
    while queue:
        batch = queue.pop_many(size)
        frozen = len(G)
        results = batch_map(threads, lambda e: G.reduce(e[1], count=frozen), batch)
        for k, entry in enumerate(batch):
            residue = results[k][0]
            if is_zero(residue):
                continue
            # Residues never conform to anything already stored, which is
            # what makes the completion terminate.
            assert G.first_conforming(residue) == -1
            G.add(residue)
            for g in list(G.vectors):
                queue.push(vec_add(residue, g))
            queue.requeue(batch[k + 1 :])
            break
    return G


def extract_minimal(gset: GraverSet) -> GraverSet:
    """Conformally minimal members of gset.

    Applied to a completed engine output this is exactly the Graver basis,
    and in particular is closed under negation; that symmetry is certified
    here rather than assumed.
    """
    out = GraverSet(gset.dim, backend=gset.backend)
    for i, v in enumerate(gset.vectors):
        if gset.first_conforming(v, skip=i) == -1:
            out.add(v)
    assert all(vec_neg(v) in out for v in out.vectors)
    out.closed_under_negation = True
    return out
