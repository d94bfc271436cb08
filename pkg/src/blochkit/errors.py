"""Exception hierarchy.

Parse-time problems (bad domain strings, bad symbol text, bad point
literals) map to CLI exit code 1; numerical-domain problems (points
outside the domain, branch cuts, unsupported metrics) map to exit 2.
"""


class BlochkitError(Exception):
    """Base class for all toolkit errors."""


class UsageError(BlochkitError):
    """Malformed input text: domain spec, symbol text, point literal, flags."""


class ParseError(UsageError):
    """Symbol or literal text does not match the grammar."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DimensionMismatch(UsageError):
    """Point length or symbol arity does not match the domain."""


class NumericalDomainError(BlochkitError):
    """Runtime numerical-domain failure. CLI exit code 2."""


class OutsideDomainError(NumericalDomainError):
    """A point that must be interior is not."""


class BranchCutError(NumericalDomainError):
    """Log argument within 1e-12 of the negative real axis or at a pole."""


class UnsupportedDomainError(NumericalDomainError):
    """Operation not defined for this domain kind (e.g. exceptional geometry)."""


class UnsupportedMetricError(UnsupportedDomainError):
    """Bergman metric tensor not available for this domain kind."""


class AmbiguousConstantError(NumericalDomainError):
    """A verdict needs a Bloch constant whose registry binding is ambiguous."""


class SuiteFailure(BlochkitError):
    """A verify suite check failed. CLI exit code 3."""
