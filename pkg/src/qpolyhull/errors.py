"""Exception types shared across the package."""


class QPolyHullError(Exception):
    """Base class for all package errors."""


class NotPrime(QPolyHullError):
    """Characteristic argument is not a prime number."""


class SizeCapExceeded(QPolyHullError):
    """Requested field or enumeration exceeds the configured size cap."""


class NotADivisor(QPolyHullError):
    """Subfield level does not divide the extension degree."""


class TowerMismatch(QPolyHullError):
    """Operands belong to different field towers."""


class DependentGenerators(QPolyHullError):
    """Generator set is linearly dependent over the top field."""


class DegenerateInput(QPolyHullError):
    """Input is outside the parameter space (zero operator, zero vector, ...)."""


class NotNormalBasis(QPolyHullError):
    """Operation requires a normal basis."""


class NotApplicable(QPolyHullError):
    """Hypotheses of a closed-form shortcut do not hold for this input."""


class PreconditionFailed(QPolyHullError):
    """A stated precondition was violated by the caller."""


class ParseError(QPolyHullError):
    """Element or file syntax could not be parsed."""


class ConsistencyError(QPolyHullError):
    """Two routes that must agree produced different answers (internal bug guard)."""
