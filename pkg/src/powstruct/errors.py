"""Exception hierarchy shared across the package."""


class PowStructError(Exception):
    pass


class DomainError(PowStructError, ValueError):
    """An operation was applied outside its mathematical domain."""


class OrderMismatchError(DomainError):
    pass


class NotInvertibleError(DomainError):
    pass


class InvalidSubstitutionError(DomainError):
    pass


class ParseError(PowStructError, ValueError):
    pass


class InvariantError(PowStructError, RuntimeError):
    """Raised when an internal cross-check fails. Never expected in practice."""
