"""Packed int64 kernels for the hot loops of the completion engines.

Normal-form reduction scans and orbit canonicalisation dominate the runtime
of every engine, so they run over C-contiguous int64 buffers.  Two
interchangeable backends implement the same three functions:

* ``_numba``: ``@njit``-compiled loops (the default when numba imports),
* ``_numpy``: vectorised pure-numpy fallback.

Set ``SYMGRAVER_KERNELS=numpy`` or ``=numba`` to force one; the default
``auto`` picks numba when available.  Both backends are exact over the
guarded entry range and return bit-identical results.
"""

from __future__ import annotations

import importlib
import os
from typing import Sequence

import numpy as np

ENV_VAR = "SYMGRAVER_KERNELS"

# Entries beyond this bound leave the packed fast path; arithmetic on two
# guarded entries then still fits int64 with room to spare.
ENTRY_LIMIT = 2**31

MASK_BITS = 64

_modules: dict[str, object] = {}


def _load(name: str):
    if name not in _modules:
        _modules[name] = importlib.import_module("._" + name, __package__)
    return _modules[name]


def available_backends() -> list[str]:
    """Names of backends that import cleanly, preferred first."""
    names = []
    try:
        _load("numba")
        names.append("numba")
    except ImportError:
        pass
    names.append("numpy")
    return names


def get_backend(name: str | None = None):
    """Return the kernel module selected by name, env var, or auto-detection."""
    name = name or os.environ.get(ENV_VAR, "auto")
    if name == "auto":
        try:
            return _load("numba")
        except ImportError:
            return _load("numpy")
    if name in ("numba", "numpy"):
        return _load(name)
    raise ValueError(f"unknown kernel backend {name!r}")


def sign_masks(row: Sequence[int]) -> tuple[np.uint64, np.uint64]:
    """Bitmasks of positive and negative positions among the first 64 coords.

    The masks give a necessary condition for ``g conforms to s``:
    ``pos(g) subset pos(s)`` and ``neg(g) subset neg(s)``.  Coordinates past
    bit 63 are simply not covered; the full entrywise check still runs.
    """
    pos = 0
    neg = 0
    for j in range(min(len(row), MASK_BITS)):
        x = row[j]
        if x > 0:
            pos |= 1 << j
        elif x < 0:
            neg |= 1 << j
    return np.uint64(pos), np.uint64(neg)


def pack_vector(v: Sequence[int]) -> np.ndarray:
    return np.fromiter(v, dtype=np.int64, count=len(v))
