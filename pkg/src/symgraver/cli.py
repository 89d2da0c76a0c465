"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 unreadable or invalid input, 3 resource
cap exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

from .engine_fast import fast_graver
from .engine_pottier import extract_minimal, pottier_graver
from .engine_sym import canonical_forms, sym_pottier
from .engine_sym_fast import sym_fast_graver
from .errors import (
    FixedWidthOverflowError,
    GraverError,
    MembershipError,
    ParseError,
    ResourceLimitError,
    ValidationError,
    VerificationError,
)
from .formats import (
    canonical_sign,
    read_matrix,
    read_symmetry,
    read_vectors,
    up_to_sign,
    write_matrix,
    write_symmetry,
    write_vectors,
)
from .lattice import LatticeBasis, kernel_lattice, minimal_projected_generators, preprocess, to_original_coords
from .models import table_group, table_matrix
from .oracle import brute_force_graver, is_graver_element
from .symmetry import PermutationGroup, conjugate, orbit, verify_invariance
from .vectors import is_zero, vec_neg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_input_args(p: _Parser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", help="constraint matrix file; the lattice is its kernel")
    src.add_argument("--lattice", help="lattice generator file")


def build_parser() -> _Parser:
    parser = _Parser(prog="symgraver", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graver", help="compute a Graver basis")
    _add_input_args(p)
    p.add_argument("--algorithm", choices=["pottier", "fast"], default="fast")
    p.add_argument("--output", required=True, help="output vector file (.gra)")
    p.add_argument("--signed", action="store_true", help="emit both signs of every vector")
    p.add_argument("--stats", help="write run statistics to this JSON file")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_graver)

    p = sub.add_parser("graver-sym", help="compute a Graver basis using a symmetry group")
    _add_input_args(p)
    p.add_argument("--symmetry", required=True, help="permutation generator file (.sym)")
    p.add_argument("--algorithm", choices=["pottier", "fast"], default="fast")
    p.add_argument("--output", required=True, help="output vector file (.gra)")
    p.add_argument("--reps", required=True, help="output orbit representative file (.rep)")
    p.add_argument("--signed", action="store_true", help="emit both signs of every vector")
    p.add_argument("--stats", help="write run statistics to this JSON file")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_graver_sym)

    p = sub.add_parser("kernel", help="write a basis of the saturated kernel of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--output", required=True, help="output lattice basis file (.lat)")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("gen-table", help="emit the matrix and symmetry group of a table problem")
    p.add_argument("dims", nargs="+", type=int, help="table dimensions, e.g. 3 3 4")
    p.add_argument("--matrix-out", required=True)
    p.add_argument("--sym-out", required=True)
    p.set_defaults(func=cmd_gen_table)

    p = sub.add_parser("orbits", help="decompose a vector set into group orbits")
    p.add_argument("--vectors", required=True, help="vector file (.gra)")
    p.add_argument("--symmetry", required=True)
    p.add_argument("--reps-out", required=True)
    p.add_argument("--stats", help="write orbit statistics to this JSON file")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("check", help="certify a vector file against its lattice")
    p.add_argument("--graver", required=True, help="vector file to certify")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix")
    src.add_argument("--lattice")
    p.add_argument(
        "--bound",
        type=int,
        help="also compare against brute-force enumeration up to this infinity norm",
    )
    p.set_defaults(func=cmd_check)

    return parser


def _load_basis(args) -> LatticeBasis:
    if args.matrix:
        rows, n = read_matrix(args.matrix)
        return kernel_lattice(rows, ncols=n)
    rows, n = read_matrix(args.lattice)
    if not rows:
        return LatticeBasis([], n)
    return LatticeBasis.from_generators(rows, n)


def _write_outputs(args, signed_vectors, n: int) -> list:
    up = up_to_sign(signed_vectors)
    if args.signed:
        out = sorted(up + [vec_neg(v) for v in up])
    else:
        out = up
    write_vectors(args.output, out, n)
    return up


def _orbit_stats(group: PermutationGroup, signed_vectors, n: int):
    """Partition a signed, orbit-closed vector set into orbits of the group
    action extended by negation.

    A Graver basis is closed under both the symmetry group and global sign
    flip, so representatives are counted modulo both: a permutation orbit
    merges with the orbit of its negation when the two differ.  Returns
    (sorted representatives, signed orbit sizes aligned with them); each
    permutation orbit is certified against an independent BFS enumeration.
    """
    canons = canonical_forms(group, list(signed_vectors))
    counts = Counter(canons)
    sreps = sorted(counts)
    for rep in sreps:
        if len(orbit(rep, group)) != counts[rep]:
            raise VerificationError(f"orbit of {rep} is not fully contained in the output")
    neg_canons = canonical_forms(group, [vec_neg(r) for r in sreps])
    merged: dict = {}
    for rep, neg in zip(sreps, neg_canons):
        # Written representatives are sign-canonical like the .gra rows.
        key = canonical_sign(min(rep, neg))
        merged[key] = counts[rep] if neg == rep else counts[rep] + counts[neg]
    reps = sorted(merged)
    return reps, [merged[r] for r in reps]


def cmd_graver(args) -> int:
    t0 = time.perf_counter()
    basis = _load_basis(args)
    if basis.d == 0:
        final = []
    elif args.algorithm == "pottier":
        final = extract_minimal(pottier_graver(basis.generators, threads=args.threads)).vectors
    else:
        pivoted = preprocess(basis)
        fbar = minimal_projected_generators(pivoted)
        out = fast_graver(fbar, pivoted, threads=args.threads)
        final = [to_original_coords(v, pivoted) for v in out.vectors]
    up = _write_outputs(args, final, basis.n)
    if args.stats:
        stats = {
            "graver_size_up_to_sign": len(up),
            "runtime_ms": int((time.perf_counter() - t0) * 1000),
            "algorithm": args.algorithm,
        }
        with open(args.stats, "w") as fh:
            json.dump(stats, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_graver_sym(args) -> int:
    t0 = time.perf_counter()
    basis = _load_basis(args)
    group = read_symmetry(args.symmetry)
    if group.degree != basis.n:
        raise ValidationError(
            f"group degree {group.degree} does not match lattice dimension {basis.n}"
        )
    if basis.d == 0:
        final = []
    else:
        if not verify_invariance(group, basis):
            raise ValidationError("the symmetry group does not map the lattice onto itself")
        if args.algorithm == "pottier":
            expansion, _ = sym_pottier(basis.generators, group, threads=args.threads)
            final = extract_minimal(expansion).vectors
        else:
            pivoted = preprocess(basis)
            working_group = PermutationGroup(
                basis.n, [conjugate(g, pivoted.column_perm) for g in group.generators]
            )
            fbar = minimal_projected_generators(pivoted)
            expansion, _ = sym_fast_graver(fbar, working_group, pivoted, threads=args.threads)
            final = [to_original_coords(v, pivoted) for v in expansion.vectors]
    up = _write_outputs(args, final, basis.n)
    reps, sizes = _orbit_stats(group, final, basis.n)
    write_vectors(args.reps, reps, basis.n)
    if args.stats:
        stats = {
            "graver_size_up_to_sign": len(up),
            "num_representatives": len(reps),
            "group_order": group.order(),
            "orbit_sizes": sizes,
            "runtime_ms": int((time.perf_counter() - t0) * 1000),
            "algorithm": "sym-" + args.algorithm,
        }
        with open(args.stats, "w") as fh:
            json.dump(stats, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_kernel(args) -> int:
    rows, n = read_matrix(args.matrix)
    basis = kernel_lattice(rows, ncols=n)
    write_matrix(args.output, basis.generators, basis.n)
    return EXIT_OK


def cmd_gen_table(args) -> int:
    write_matrix(args.matrix_out, table_matrix(args.dims))
    write_symmetry(args.sym_out, table_group(args.dims))
    return EXIT_OK


def cmd_orbits(args) -> int:
    t0 = time.perf_counter()
    vectors, n = read_vectors(args.vectors)
    group = read_symmetry(args.symmetry)
    if group.degree != n:
        raise ValidationError(f"group degree {group.degree} does not match vector length {n}")
    signed = sorted({s for v in vectors if not is_zero(v) for s in (tuple(v), vec_neg(v))})
    reps, sizes = _orbit_stats(group, signed, n)
    write_vectors(args.reps_out, reps, n)
    if args.stats:
        stats = {
            "graver_size_up_to_sign": len(vectors),
            "num_representatives": len(reps),
            "group_order": group.order(),
            "orbit_sizes": sizes,
            "runtime_ms": int((time.perf_counter() - t0) * 1000),
        }
        with open(args.stats, "w") as fh:
            json.dump(stats, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_check(args) -> int:
    vectors, n = read_vectors(args.graver)
    basis = _load_basis(args)
    if basis.n != n:
        raise ValidationError(f"vector length {n} does not match lattice dimension {basis.n}")
    for v in vectors:
        if is_zero(v):
            raise VerificationError("the zero vector is never a Graver element")
        if not basis.member(v):
            raise VerificationError(f"{v} is not in the lattice")
        if not is_graver_element(v, basis):
            raise VerificationError(f"{v} is not conformally minimal")
    if args.bound is not None:
        expect = {canonical_sign(v) for v in brute_force_graver(basis, args.bound).vectors}
        got = {canonical_sign(v) for v in vectors if max(map(abs, v), default=0) <= args.bound}
        missing = expect - got
        extra = got - expect
        if missing:
            raise VerificationError(f"missing Graver element {sorted(missing)[0]}")
        if extra:
            raise VerificationError(f"{sorted(extra)[0]} is not a Graver element within the bound")
    print(f"certified {len(vectors)} vectors")
    return EXIT_OK


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, ValidationError, MembershipError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ResourceLimitError, FixedWidthOverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
