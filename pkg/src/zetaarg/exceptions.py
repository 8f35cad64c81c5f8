class ZetaArgError(Exception):
    """Base class for all errors raised by zetaarg."""


class DomainError(ZetaArgError, ValueError):
    """An argument lies outside the region where an operation is defined."""


class AccuracyError(ZetaArgError, ArithmeticError):
    """A requested accuracy could not be certified within the iteration cap."""


class CoefficientOnlyError(DomainError):
    """A certificate without a prefactor was used where the prefactor is needed."""


class NoSignChangeError(ZetaArgError, ValueError):
    """A bracketing interval does not contain a sign change."""
