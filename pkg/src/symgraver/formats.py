"""Plain-text integer file formats.

Matrices, lattice bases, and Graver vector sets all share one layout: a
header line ``rows cols`` followed by the entries in row-major order,
whitespace-separated (line breaks are not significant on input; the writer
emits one row per line).  Symmetry files hold permutation generators as
1-based image rows under a ``count degree`` header.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import ParseError, ValidationError
from .symmetry import Permutation, PermutationGroup
from .vectors import IntVector, is_zero, vec_neg


class _TokenReader:
    """Whitespace token stream that remembers line numbers for errors."""

    def __init__(self, path: str):
        self.path = path
        self.line = 0
        self._iter = self._tokens()

    def _tokens(self) -> Iterator[str]:
        with open(self.path, "r") as fh:
            for lineno, text in enumerate(fh, 1):
                self.line = lineno
                for tok in text.split():
                    yield tok

    def next_int(self, what: str) -> int:
        try:
            tok = next(self._iter)
        except StopIteration:
            raise ParseError(f"{self.path}:{self.line}: file ends before {what}") from None
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"{self.path}:{self.line}: expected {what}, got {tok!r}") from None

    def expect_end(self) -> None:
        try:
            tok = next(self._iter)
        except StopIteration:
            return
        raise ParseError(f"{self.path}:{self.line}: trailing data starting at {tok!r}")


def read_matrix(path: str) -> tuple[list[IntVector], int]:
    """Read a matrix file; returns (rows, column count)."""
    reader = _TokenReader(path)
    m = reader.next_int("the row count")
    n = reader.next_int("the column count")
    if m < 0 or n < 0:
        raise ParseError(f"{path}:{reader.line}: negative size in header")
    rows = [
        tuple(reader.next_int(f"entry {j + 1} of row {i + 1}") for j in range(n))
        for i in range(m)
    ]
    reader.expect_end()
    return rows, n


def write_matrix(path: str, rows: Sequence[Sequence[int]], ncols: int | None = None) -> None:
    """Write a matrix file, one row per line under an ``m n`` header."""
    rows = [tuple(int(x) for x in r) for r in rows]
    if ncols is None:
        if not rows:
            raise ValueError("column count is required for an empty matrix")
        ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise ValueError("rows have differing lengths")
    with open(path, "w") as fh:
        fh.write(f"{len(rows)} {ncols}\n")
        for r in rows:
            fh.write(" ".join(str(x) for x in r) + "\n")


def read_symmetry(path: str) -> PermutationGroup:
    """Read permutation generators (1-based images) into a group."""
    reader = _TokenReader(path)
    k = reader.next_int("the generator count")
    n = reader.next_int("the degree")
    if k < 0 or n < 0:
        raise ParseError(f"{path}:{reader.line}: negative size in header")
    gens = []
    for i in range(k):
        images = tuple(reader.next_int(f"image {j + 1} of generator {i + 1}") for j in range(n))
        try:
            gens.append(Permutation(images))
        except ValidationError:
            # reader.line now sits on the generator's last token
            raise ValidationError(
                f"{path}:{reader.line}: generator {i + 1} is not a bijection on 1..{n}"
            ) from None
    reader.expect_end()
    return PermutationGroup(n, gens)


def write_symmetry(path: str, group: PermutationGroup) -> None:
    with open(path, "w") as fh:
        fh.write(f"{len(group.generators)} {group.degree}\n")
        for g in group.generators:
            fh.write(" ".join(str(i) for i in g.images) + "\n")


def canonical_sign(v: Sequence[int]) -> IntVector:
    """The member of {v, -v} whose first nonzero entry is positive."""
    v = tuple(int(x) for x in v)
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return vec_neg(v)
    raise ValueError("the zero vector has no canonical sign")


def up_to_sign(vectors) -> list[IntVector]:
    """Sorted sign-canonical deduplication of a signed vector collection."""
    return sorted({canonical_sign(v) for v in vectors if not is_zero(v)})


def write_vectors(path: str, vectors: Sequence[IntVector], n: int) -> None:
    """Write a vector set in the shared matrix layout."""
    write_matrix(path, vectors, n)


def read_vectors(path: str) -> tuple[list[IntVector], int]:
    return read_matrix(path)
