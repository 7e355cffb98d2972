"""Shared exception types."""


class SiegelEulerError(Exception):
    """Base class for all library errors."""


class DomainError(SiegelEulerError):
    """Arguments outside the mathematical domain of an operation."""


class SizeLimitError(SiegelEulerError):
    """Request exceeds a hard size guard (exhaustive enumeration, series order)."""


class IngestionError(SiegelEulerError):
    """A forms-table file violates the schema or conflicts with derived counts."""


class UnknownHeckeError(SiegelEulerError):
    """Frobenius-trace specialization hit a symbol without eigenvalue data."""

    def __init__(self, symbol, prime):
        self.symbol = symbol
        self.prime = prime
        super().__init__(f"no Hecke eigenvalue data for {symbol} at p={prime}")


class UnknownDimensionError(SiegelEulerError):
    """Rank computation hit a symbol without a resolvable dimension."""

    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__(f"no dimension data for {symbol}")


class NoClosedFormError(SiegelEulerError):
    """A parameter factor has no closed-form spin evaluation."""

    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"no closed-form spin evaluation for factor {factor}")


class IncompleteDataError(SiegelEulerError):
    """A numeric answer was requested but the forms table leaves gaps."""

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"incomplete forms-table data, missing: {list(self.missing)}")


class InternalConsistencyError(SiegelEulerError):
    """An internal invariant failed (integrality, orbit pairing, ...)."""
