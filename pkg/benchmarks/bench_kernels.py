"""Timing comparison of the numba and numpy kernel backends.

Micro level: conformal-dominance scans and iterated reduction against the
stored signed Graver basis of the 3x3x3 table (1590 vectors, n = 27).
Macro level: the norm-ordered engine end to end on small tables.  Both
backends must return identical results; the script asserts that before it
prints any timing.

Run as ``python3 benchmarks/bench_kernels.py``; add ``--full`` to include
the 3x3x3 end-to-end row (slower, dominated by the numpy fallback).
"""

from __future__ import annotations

import argparse
import random
import time

from symgraver import (
    GraverSet,
    fast_graver,
    kernel_lattice,
    minimal_projected_generators,
    preprocess,
    table_matrix,
    to_original_coords,
)
from symgraver.kernels import available_backends, get_backend
from symgraver.vectors import vec_add


def signed_table_graver(dims):
    """Signed Graver basis of the table lattice, original coordinates."""
    basis = kernel_lattice(table_matrix(dims))
    pivoted = preprocess(basis)
    fbar = minimal_projected_generators(pivoted)
    out = fast_graver(fbar, pivoted)
    signed = [to_original_coords(v, pivoted) for v in out.vectors]
    return basis, signed


def candidate_batch(basis, signed, count, seed):
    """Pair sums and random small lattice combinations to reduce."""
    rng = random.Random(seed)
    cands = []
    for _ in range(count):
        if rng.random() < 0.5:
            u = signed[rng.randrange(len(signed))]
            v = signed[rng.randrange(len(signed))]
            cands.append(vec_add(u, v))
        else:
            coeffs = [rng.randint(-2, 2) for _ in basis.generators]
            cands.append(
                tuple(
                    sum(c * g[j] for c, g in zip(coeffs, basis.generators))
                    for j in range(basis.n)
                )
            )
    return [c for c in cands if any(c)]


def time_op(fn, repeat):
    fn()  # warm up: first numba call may compile
    best = min(timed(fn) for _ in range(repeat))
    return best


def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def bench_micro(backends, repeat, seed):
    basis, signed = signed_table_graver((3, 3, 3))
    cands = candidate_batch(basis, signed, 2000, seed)
    rows = []
    residues = {}
    for name in backends:
        gset = GraverSet(basis.n, signed, backend=get_backend(name))

        def scan():
            return [gset.first_conforming(c) for c in cands]

        def reduce_all():
            return [gset.reduce(c)[0] for c in cands]

        rows.append((f"first_conforming x{len(cands)}", name, time_op(scan, repeat)))
        rows.append((f"reduce x{len(cands)}", name, time_op(reduce_all, repeat)))
        residues[name] = (scan(), reduce_all())
    first = residues[backends[0]]
    for name in backends[1:]:
        assert residues[name] == first, f"backend {name} disagrees on the micro batch"
    return rows


def bench_macro(backends, repeat, dims_list):
    rows = []
    for dims in dims_list:
        basis = kernel_lattice(table_matrix(dims))
        pivoted = preprocess(basis)
        fbar = minimal_projected_generators(pivoted)
        outputs = {}
        for name in backends:
            backend = get_backend(name)

            def run():
                return fast_graver(fbar, pivoted, backend=backend)

            label = "x".join(map(str, dims))
            rows.append((f"fast_graver {label}", name, time_op(run, repeat)))
            outputs[name] = sorted(run().vectors)
        first = outputs[backends[0]]
        for name in backends[1:]:
            assert outputs[name] == first, f"backend {name} disagrees on {dims}"
    return rows


def print_rows(rows, backends):
    base = {}
    print(f"{'operation':<28} {'backend':<8} {'seconds':>9}  speedup")
    for op, name, secs in rows:
        if name == backends[-1]:
            base[op] = secs
    for op, name, secs in rows:
        rel = base[op] / secs if secs else float("inf")
        print(f"{op:<28} {name:<8} {secs:>9.4f}  {rel:>6.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timed repetitions, best kept")
    parser.add_argument("--seed", type=int, default=20260814)
    parser.add_argument("--full", action="store_true", help="include the 3x3x3 end-to-end row")
    args = parser.parse_args()

    backends = available_backends()
    if backends == ["numpy"]:
        print("numba unavailable; timing the numpy fallback only")
    dims_list = [(3, 3), (2, 2, 3)] + ([(3, 3, 3)] if args.full else [])
    rows = bench_micro(backends, args.repeat, args.seed)
    rows += bench_macro(backends, args.repeat, dims_list)
    print_rows(rows, backends)


if __name__ == "__main__":
    main()
