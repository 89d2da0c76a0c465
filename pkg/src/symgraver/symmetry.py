"""Coordinate permutations, orbits, and canonical orbit representatives.

A permutation sigma acts on vectors by coordinate relabelling:
``apply(sigma, v)[j] = v[sigma(j)]``.  Groups are given by generators and
materialised by breadth-first closure when full element lists are needed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionError, ResourceLimitError, ValidationError
from .vectors import IntVector, prefix_norm

DEFAULT_ORBIT_CAP = 10**7


@dataclass(frozen=True)
class Permutation:
    """Bijection on coordinate positions; images are 1-based."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValidationError("images are not a bijection on 1..n")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, v: Sequence[int]) -> IntVector:
        if len(v) != len(self.images):
            raise DimensionError(f"vector length {len(v)} does not match degree {self.degree}")
        return tuple(v[i - 1] for i in self.images)

    def __call__(self, v: Sequence[int]) -> IntVector:
        return self.apply(v)

    def compose(self, other: "Permutation") -> "Permutation":
        """Permutation with apply(a.compose(b), v) == apply(a, apply(b, v))."""
        if other.degree != self.degree:
            raise DimensionError("cannot compose permutations of different degree")
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for j, i in enumerate(self.images):
            inv[i - 1] = j + 1
        return Permutation(tuple(inv))


def conjugate(sigma: Permutation, positions: Sequence[int]) -> Permutation:
    """Rewrite sigma to act on reordered coordinates.

    ``positions[j]`` is the original index held by new coordinate j (the
    ``column_perm`` of a pivoted basis); the result sigma' satisfies
    reorder(apply(sigma, v)) == apply(sigma', reorder(v)).
    """
    inv = {orig: j for j, orig in enumerate(positions)}
    images = tuple(inv[sigma.images[positions[j]] - 1] + 1 for j in range(len(positions)))
    return Permutation(images)


class PermutationGroup:
    """Finite permutation group given by generators.

    The element list is materialised lazily by breadth-first closure and
    cached; ``cap`` guards against accidentally huge groups.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        self.degree = int(degree)
        for g in generators:
            if g.degree != self.degree:
                raise DimensionError("generator degree does not match group degree")
        self.generators = tuple(generators)
        self._elements: tuple[Permutation, ...] | None = None
        self._images: np.ndarray | None = None

    def elements(self, cap: int = DEFAULT_ORBIT_CAP) -> tuple[Permutation, ...]:
        if self._elements is None:
            ident = Permutation.identity(self.degree)
            seen = {ident.images}
            out = [ident]
            queue = deque([ident])
            while queue:
                cur = queue.popleft()
                for g in self.generators:
                    nxt = cur.compose(g)
                    if nxt.images not in seen:
                        if len(out) >= cap:
                            raise ResourceLimitError(f"group has more than {cap} elements")
                        seen.add(nxt.images)
                        out.append(nxt)
                        queue.append(nxt)
            self._elements = tuple(out)
        if len(self._elements) > cap:
            raise ResourceLimitError(f"group has more than {cap} elements")
        return self._elements

    def order(self, cap: int = DEFAULT_ORBIT_CAP) -> int:
        return len(self.elements(cap))

    def element_images(self, cap: int = DEFAULT_ORBIT_CAP) -> np.ndarray:
        """All elements as one 0-based gather matrix, identity first."""
        elems = self.elements(cap)
        if self._images is None or self._images.shape[0] != len(elems):
            self._images = np.array(
                [[i - 1 for i in p.images] for p in elems], dtype=np.int64
            )
        return self._images


def apply(sigma: Permutation, v: Sequence[int]) -> IntVector:
    """Coordinate relabelling action of sigma on v."""
    return sigma.apply(v)


def orbit(v: Sequence[int], group: PermutationGroup, cap: int = DEFAULT_ORBIT_CAP) -> set[IntVector]:
    """Closure of v under the group generators (breadth-first)."""
    start = tuple(int(x) for x in v)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for g in group.generators:
            nxt = g.apply(cur)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise ResourceLimitError(f"orbit has more than {cap} elements")
                seen.add(nxt)
                queue.append(nxt)
    return seen


@dataclass(frozen=True)
class OrbitRecord:
    """Summary of one vector orbit."""

    canonical: IntVector
    size: int
    min_prefix_norm: int | None = None


def canonical_rep(
    v: Sequence[int],
    group: PermutationGroup,
    d: int | None = None,
    cap: int = DEFAULT_ORBIT_CAP,
) -> OrbitRecord:
    """Lexicographically least orbit member, orbit size, and (optionally)
    the minimal prefix norm over the orbit."""
    orb = orbit(v, group, cap)
    canonical = min(orb)
    mpn = min(prefix_norm(u, d) for u in orb) if d is not None else None
    return OrbitRecord(canonical=canonical, size=len(orb), min_prefix_norm=mpn)


def verify_invariance(group: PermutationGroup, basis) -> bool:
    """True iff every generator maps every lattice generator into the lattice."""
    if group.degree != basis.n:
        raise DimensionError(
            f"group degree {group.degree} does not match lattice dimension {basis.n}"
        )
    return all(
        basis.member(sigma.apply(g)) for sigma in group.generators for g in basis.generators
    )
