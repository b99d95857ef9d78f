"""Exception taxonomy shared by the engine and the HTTP facade.

Each class maps onto one of the closed API error kinds, so the service
layer can translate without inspecting messages.
"""

from __future__ import annotations

__all__ = [
    "AuthError",
    "DuplicateTableError",
    "EngineError",
    "NotFoundError",
    "StorageError",
    "ValidationError",
]


class EngineError(Exception):
    """Base class; `kind` is the machine-readable API error kind."""

    kind = "internal"


class ValidationError(EngineError):
    """Caller handed us something malformed (arity, bad values, bad query)."""

    kind = "validation"


class DuplicateTableError(ValidationError):
    """Table id or name registered twice; a configuration error."""


class NotFoundError(EngineError):
    """Pointer or table does not resolve to anything live."""

    kind = "not_found"


class AuthError(EngineError):
    """Missing or wrong API token."""

    kind = "auth"


class StorageError(EngineError):
    """The durable log could not be read or written; distinct from
    validation so callers can tell bad input from a sick disk."""

    kind = "storage"
