"""Typed errors shared across the package.

Every failure mode a caller is expected to handle gets its own class so the
CLI can map them onto distinct exit codes and tests can assert on them.
"""


class PolyspecError(Exception):
    """Base class for all package errors."""


class InvalidInput(PolyspecError):
    """Malformed input: bad JSON, wrong shapes, or a violated invariant.

    The message names the invariant that failed.
    """


class DegenerateSimplex(PolyspecError):
    """The supposed simplex vertices are affinely dependent."""


class OriginNotInterior(PolyspecError):
    """The origin is not a strictly interior point of the polytope."""


class NotReduced(PolyspecError):
    """The weight vector has gcd > 1, so the closed-form spectrum does not apply."""


class ExponentOutOfRange(PolyspecError):
    """A spectrum exponent lies outside the admissible range [0, n]."""


class EnumerationTooLarge(PolyspecError):
    """The bounding box of the requested dilate exceeds the enumeration cap."""


class InternalInconsistency(PolyspecError):
    """Two computations that must agree mathematically disagreed.

    Raised by runtime cross-checks; indicates a bug, never bad user input.
    """
