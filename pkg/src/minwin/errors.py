"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: UsageError -> 1, SpecValidationError -> 2,
ConsistencyError (and subclasses) -> 3.
"""


class MinwinError(Exception):
    """Base class for all package-specific errors."""


class UsageError(MinwinError, ValueError):
    """An operation was called with arguments outside its contract."""


class CapacityError(MinwinError):
    """A brute-force bound would be exceeded; raise instead of silently truncating."""


class SpecValidationError(MinwinError, ValueError):
    """A game specification or representation violates its invariants."""


class ConsistencyError(MinwinError):
    """An internal cross-check failed (non-integer count, method disagreement)."""


class CertificateError(ConsistencyError):
    """A dimension certificate component failed verification."""
