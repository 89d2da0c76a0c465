"""Integer lattice bases: saturated kernels, pivot preprocessing, projection
and lifting.

Everything here runs over plain Python ints and Fractions, so results are
exact regardless of entry size.  A basis can be put into pivoted form, where
the leading d x d block of the generator matrix is nonsingular; projection
onto the first d coordinates is then injective on the lattice and lifting is
unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, MembershipError, ValidationError
from .vectors import IntVector, is_zero


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[IntVector]:
    """Hermite-style row echelon basis of the row lattice.

    Only unimodular row operations are used, so the returned rows generate
    the same lattice.  Pivot columns strictly increase, pivots are positive,
    entries above each pivot are reduced modulo it, and zero rows are
    dropped; the result is therefore canonical for the lattice.
    """
    work = [list(int(x) for x in r) for r in rows if any(r)]
    if not work:
        return []
    n = len(work[0])
    for r in work:
        if len(r) != n:
            raise DimensionError("rows have differing lengths")
    top = 0
    for col in range(n):
        while True:
            cands = [i for i in range(top, len(work)) if work[i][col] != 0]
            if len(cands) <= 1:
                break
            p = min(cands, key=lambda i: (abs(work[i][col]), i))
            for i in cands:
                if i == p:
                    continue
                q = work[i][col] // work[p][col]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[p])]
        if cands:
            p = cands[0]
            work[top], work[p] = work[p], work[top]
            if work[top][col] < 0:
                work[top] = [-x for x in work[top]]
            for i in range(top):
                q = work[i][col] // work[top][col]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[top])]
            top += 1
            if top == len(work):
                break
    return [tuple(r) for r in work[:top]]


class LatticeBasis:
    """Independent generators of a sublattice of Z^n; immutable once built.

    ``column_perm[j]`` is the original index of working coordinate j
    (identity until ``preprocess``).  The cached Hermite form of the
    generators drives exact membership tests.
    """

    __slots__ = ("generators", "n", "column_perm", "pivoted", "_hnf", "_pivot_cols")

    def __init__(
        self,
        generators: Sequence[Sequence[int]],
        n: int,
        column_perm: Sequence[int] | None = None,
        pivoted: bool = False,
    ):
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        for g in gens:
            if len(g) != n:
                raise DimensionError(f"generator length {len(g)} does not match n={n}")
            if is_zero(g):
                raise ValidationError("zero vector is not a valid generator")
        hnf = hermite_rows(gens)
        if len(hnf) != len(gens):
            raise ValidationError("generators are linearly dependent")
        self.generators = gens
        self.n = int(n)
        self.column_perm = (
            tuple(range(n)) if column_perm is None else tuple(int(j) for j in column_perm)
        )
        if sorted(self.column_perm) != list(range(n)):
            raise ValidationError("column_perm is not a permutation")
        self.pivoted = bool(pivoted)
        self._hnf = hnf
        self._pivot_cols = tuple(next(j for j, x in enumerate(row) if x) for row in hnf)

    @property
    def d(self) -> int:
        return len(self.generators)

    @classmethod
    def from_generators(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> "LatticeBasis":
        """Basis of the lattice generated by possibly redundant rows.

        Dependent or duplicate rows are replaced by the canonical Hermite
        basis of the same lattice; independent rows are kept as given.
        """
        rows = [tuple(int(x) for x in r) for r in rows]
        nonzero = [r for r in rows if not is_zero(r)]
        if n is None:
            if not rows:
                raise DimensionError("cannot infer dimension from an empty generating set")
            n = len(rows[0])
        hnf = hermite_rows(nonzero)
        if len(hnf) == len(nonzero):
            return cls(nonzero, n)
        return cls(hnf, n)

    def member(self, v: Sequence[int]) -> bool:
        """Exact membership of v in the lattice (working coordinates)."""
        if len(v) != self.n:
            raise DimensionError(f"vector length {len(v)} does not match n={self.n}")
        w = [int(x) for x in v]
        for row, p in zip(self._hnf, self._pivot_cols):
            a = w[p]
            if a % row[p]:
                return False
            q = a // row[p]
            if q:
                for j in range(p, self.n):
                    w[j] -= q * row[j]
        return not any(w)


def kernel_lattice(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> LatticeBasis:
    """Basis of the saturated lattice ker(A) over the integers.

    Unimodular column operations reduce A to column echelon form while the
    same operations accumulate in U; the trailing columns of U then span
    ker(A) over Z exactly (the kernel of an integer matrix is saturated, so
    no denominators can hide).
    """
    rows = [tuple(int(x) for x in r) for r in matrix]
    m = len(rows)
    if m == 0:
        if ncols is None:
            raise DimensionError("cannot infer column count from an empty matrix")
        n = ncols
    else:
        n = len(rows[0])
        for r in rows:
            if len(r) != n:
                raise DimensionError("matrix rows have differing lengths")
        if ncols is not None and ncols != n:
            raise DimensionError(f"declared column count {ncols} does not match rows")
    cols = [[rows[i][j] for i in range(m)] for j in range(n)]
    unim = [[1 if k == j else 0 for k in range(n)] for j in range(n)]
    rank = 0
    for i in range(m):
        while True:
            cands = [j for j in range(rank, n) if cols[j][i] != 0]
            if len(cands) <= 1:
                break
            p = min(cands, key=lambda j: (abs(cols[j][i]), j))
            for j in cands:
                if j == p:
                    continue
                q = cols[j][i] // cols[p][i]
                if q:
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[p])]
                    unim[j] = [a - q * b for a, b in zip(unim[j], unim[p])]
        if cands:
            p = cands[0]
            cols[rank], cols[p] = cols[p], cols[rank]
            unim[rank], unim[p] = unim[p], unim[rank]
            rank += 1
    return LatticeBasis([tuple(unim[j]) for j in range(rank, n)], n)


def preprocess(basis: LatticeBasis) -> LatticeBasis:
    """Reorder coordinates so the leading d x d generator block is nonsingular.

    Pivot columns are chosen greedily left to right (the first d rationally
    independent columns), so the permutation is deterministic and moves as
    few coordinates as possible.
    """
    d, n = basis.d, basis.n
    if d == 0:
        raise DimensionError("cannot preprocess a rank-zero basis")
    mat = [[Fraction(x) for x in g] for g in basis.generators]
    pivots: list[int] = []
    top = 0
    for col in range(n):
        if top == d:
            break
        hit = next((i for i in range(top, d) if mat[i][col] != 0), None)
        if hit is None:
            continue
        mat[top], mat[hit] = mat[hit], mat[top]
        for i in range(top + 1, d):
            if mat[i][col] != 0:
                f = mat[i][col] / mat[top][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[top])]
        pivots.append(col)
        top += 1
    assert top == d  # generators are independent, so d pivot columns exist
    chosen = set(pivots)
    sel = pivots + [j for j in range(n) if j not in chosen]
    gens = [tuple(g[j] for j in sel) for g in basis.generators]
    perm = tuple(basis.column_perm[j] for j in sel)
    return LatticeBasis(gens, n, perm, pivoted=True)


def project(v: Sequence[int], basis: LatticeBasis) -> IntVector:
    """First d coordinates of v (injective on the lattice once pivoted)."""
    if len(v) != basis.n:
        raise DimensionError(f"vector length {len(v)} does not match n={basis.n}")
    return tuple(int(x) for x in v[: basis.d])


def lift(w: Sequence[int], basis: LatticeBasis) -> IntVector:
    """The unique lattice vector projecting onto w; exact rational solve.

    Solves c * B1 = w for the leading block B1, requires c integral, and
    returns c * B.  A fractional c means w is not in the projected lattice.
    """
    if not basis.pivoted:
        raise ValidationError("lift requires a pivoted basis")
    d = basis.d
    if len(w) != d:
        raise DimensionError(f"projected vector length {len(w)} does not match d={d}")
    # Row j of the system: sum_k c_k * gen_k[j] = w_j.
    aug = [
        [Fraction(basis.generators[k][j]) for k in range(d)] + [Fraction(int(w[j]))]
        for j in range(d)
    ]
    for col in range(d):
        hit = next(i for i in range(col, d) if aug[i][col] != 0)
        aug[col], aug[hit] = aug[hit], aug[col]
        for i in range(d):
            if i != col and aug[i][col] != 0:
                f = aug[i][col] / aug[col][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    coeffs = [aug[i][d] / aug[i][i] for i in range(d)]
    if any(c.denominator != 1 for c in coeffs):
        raise MembershipError(f"{tuple(w)} is not in the projected lattice")
    v = [0] * basis.n
    for k, c in enumerate(coeffs):
        ck = int(c)
        if ck:
            for j in range(basis.n):
                v[j] += ck * basis.generators[k][j]
    return tuple(v)


def member(v: Sequence[int], basis: LatticeBasis) -> bool:
    return basis.member(v)


def to_working_coords(v: Sequence[int], basis: LatticeBasis) -> IntVector:
    """Reorder an original-coordinate vector into working coordinates."""
    if len(v) != basis.n:
        raise DimensionError(f"vector length {len(v)} does not match n={basis.n}")
    return tuple(int(v[j]) for j in basis.column_perm)


def to_original_coords(v: Sequence[int], basis: LatticeBasis) -> IntVector:
    """Undo the preprocessing permutation on a working-coordinate vector."""
    if len(v) != basis.n:
        raise DimensionError(f"vector length {len(v)} does not match n={basis.n}")
    out = [0] * basis.n
    for j, orig in enumerate(basis.column_perm):
        out[orig] = int(v[j])
    return tuple(out)


@dataclass(frozen=True)
class InputSetFbar:
    """Negation-closed lift of the Graver basis of the projected lattice.

    Every element is conformally minimal in the full lattice, which makes
    the set a valid seed for the norm-ordered engines.
    """

    vectors: tuple[IntVector, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def minimal_projected_generators(basis: LatticeBasis) -> InputSetFbar:
    """Seed set for the norm-ordered engines: lift of the Graver basis of
    the projected lattice pi(Lambda) in Z^d.

    The projected generators span pi(Lambda), the baseline completion engine
    computes its Graver basis, and each element lifts uniquely back into the
    lattice.  Because projection is injective here, the lifts are themselves
    conformally minimal in the full lattice.
    """
    from .engine_pottier import extract_minimal, pottier_graver

    if not basis.pivoted:
        raise ValidationError("minimal_projected_generators requires a pivoted basis")
    if basis.d == 0:
        raise DimensionError("rank-zero basis has no projected generators")
    projected = [g[: basis.d] for g in basis.generators]
    minimal = extract_minimal(pottier_graver(projected))
    lifted = sorted(lift(w, basis) for w in minimal)
    return InputSetFbar(tuple(lifted))
