"""Exception classes shared across the package."""

from __future__ import annotations


class VacpolError(Exception):
    """Base class for all package errors."""


class ValidationError(VacpolError):
    """Bad input data: particle tables, constants files, malformed rows."""


class ParticleTableError(ValidationError):
    """Particle-table parse or validation failure.

    Carries the 1-based line number when the failure is tied to a row.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConstantsFileError(ValidationError):
    """Constants-override file parse or validation failure."""


class DomainError(VacpolError):
    """Numeric or domain failure: empty sets, zero total weight, bad scales."""
