"""Exception types shared across the package."""

from __future__ import annotations


class GraverError(Exception):
    """Base class for all package errors."""


class DimensionError(GraverError):
    """Vector lengths or coordinate counts do not match."""


class MembershipError(GraverError):
    """A vector that must lie in the lattice does not."""


class ResourceLimitError(GraverError):
    """An enumeration exceeded its configured cap."""


class FixedWidthOverflowError(GraverError):
    """An entry is too large for the packed 64-bit fast path.

    Raised instead of wrapping around: results stay exact or the run dies.
    """


class ParseError(GraverError):
    """A file could not be parsed; message names the file and line."""


class ValidationError(GraverError):
    """Parsed input is structurally valid but semantically wrong."""


class VerificationError(GraverError):
    """A certification check failed; message names the offending vector."""
