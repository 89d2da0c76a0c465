"""Exact integer vectors and the conformal (sign-compatible) partial order.

Vectors are plain tuples of Python ints, so every operation outside the
packed kernels is arbitrary precision.  The conformal order ``u <= v``
(u lies in the closed orthant of v and is componentwise dominated in
absolute value) is the minimality order shared by all completion engines
and by the brute-force oracle.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError

IntVector = tuple[int, ...]


def _check_same_length(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} vs {len(v)}")


def conforms(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff u and v agree in sign and |u[j]| <= |v[j]| in every coordinate."""
    _check_same_length(u, v)
    for uj, vj in zip(u, v):
        if uj > 0:
            if vj < uj:
                return False
        elif uj < 0:
            if vj > uj:
                return False
    return True


def pos_neg_split(v: Sequence[int]) -> tuple[IntVector, IntVector]:
    """Split v into its positive and negative parts, v = v_plus - v_minus."""
    plus = tuple(x if x > 0 else 0 for x in v)
    minus = tuple(-x if x < 0 else 0 for x in v)
    return plus, minus


def prefix_norm(v: Sequence[int], d: int) -> int:
    """L1 norm of the first d coordinates."""
    if not 1 <= d <= len(v):
        raise DimensionError(f"prefix length {d} out of range for dimension {len(v)}")
    return sum(abs(x) for x in v[:d])


def same_orthant_prefix(u: Sequence[int], v: Sequence[int], d: int) -> bool:
    """True iff u and v have no sign conflict among the first d coordinates."""
    _check_same_length(u, v)
    if not 1 <= d <= len(u):
        raise DimensionError(f"prefix length {d} out of range for dimension {len(u)}")
    for uj, vj in zip(u[:d], v[:d]):
        if (uj > 0 and vj < 0) or (uj < 0 and vj > 0):
            return False
    return True


def vec_add(u: Sequence[int], v: Sequence[int]) -> IntVector:
    _check_same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[int], v: Sequence[int]) -> IntVector:
    _check_same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(v: Sequence[int]) -> IntVector:
    return tuple(-x for x in v)


def is_zero(v: Iterable[int]) -> bool:
    return not any(v)


def zero_vector(n: int) -> IntVector:
    return (0,) * n
