from __future__ import annotations


class SymquadError(Exception):
    """Base class for every error raised by the engine."""


class InputError(SymquadError, ValueError):
    """Malformed or out-of-range input."""


class StructuralError(SymquadError):
    """Objects that cannot be combined, e.g. identities from another eps family."""


class PreconditionError(SymquadError):
    """A construction was handed input outside the range it is valid for."""


class ResourceError(SymquadError):
    """A configured exhaustive-enumeration cap would be exceeded."""
