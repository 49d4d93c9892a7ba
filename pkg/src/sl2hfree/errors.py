"""Exception taxonomy shared across the engine and the CLI.

The CLI maps these onto exit codes: ParseError -> 1, PreconditionError
(and subclasses) -> 2, CertificateError -> 3.
"""

from __future__ import annotations


class ParseError(ValueError):
    """Input text does not conform to the grammar."""


class PreconditionError(ValueError):
    """An operation was called outside its contract."""


class NotInvertibleError(PreconditionError):
    """Determinant is not a nonzero constant."""


class FieldLimitationError(PreconditionError):
    """The answer exists over the complex numbers but requires scalars
    outside the configured exact field (e.g. irrational eigenvalues of a
    constant matrix)."""


class CertificateError(AssertionError):
    """An internally produced certificate failed its exact verification.
    This indicates a bug and must never occur."""
