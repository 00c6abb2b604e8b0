"""Exception hierarchy.

Every error the toolkit raises derives from :class:`LeibnizError`; the CLI
maps all of them to exit code 2.
"""


class LeibnizError(Exception):
    pass


class ParseError(LeibnizError, ValueError):
    pass


class FieldMismatch(LeibnizError, ValueError):
    pass


class DivisionByZero(LeibnizError, ZeroDivisionError):
    pass


class Unsupported(LeibnizError):
    pass


class AmbientMismatch(LeibnizError, ValueError):
    pass


class DimensionMismatch(LeibnizError, ValueError):
    pass


class NotClosed(LeibnizError):
    """A subspace handed to an operation that needs a subalgebra."""


class NotAnIdeal(LeibnizError):
    pass


class IdentityFailed(LeibnizError):
    """The left Leibniz identity fails; ``violations`` lists basis triples."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class BudgetExceeded(LeibnizError):
    pass


class RadicalInconsistent(LeibnizError):
    pass


class RootExists(LeibnizError):
    """A side condition requiring a rootless quadratic failed."""


class RootUnknown(LeibnizError):
    pass


class SigmaZero(LeibnizError):
    pass


class DimTooSmall(LeibnizError):
    pass


class NotStrong(LeibnizError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAnisotropic(NotStrong):
    pass


class CharacteristicError(LeibnizError):
    """A recipe was asked for over a field of the wrong characteristic."""
