"""Exception hierarchy shared by every module."""


class AlphaJoinError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(AlphaJoinError, ValueError):
    """A size or parameter is outside its allowed range."""


class InvalidInputError(AlphaJoinError, ValueError):
    """A graph or matrix does not satisfy an operation's precondition."""


class ParseError(AlphaJoinError, ValueError):
    """Malformed edge-list text or family descriptor."""


class ContractViolation(AlphaJoinError, ValueError):
    """An argument breaks a hard contract (e.g. non-symmetric matrix)."""


class PoleError(AlphaJoinError, ArithmeticError):
    """A resolvent was requested at (or numerically at) an eigenvalue.

    ``eigenvalue`` carries the estimate of the offending eigenvalue when
    one is available.
    """

    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NumericInconsistencyError(AlphaJoinError, ArithmeticError):
    """A numerical result contradicts what the mathematics guarantees."""


class LemmaPreconditionError(AlphaJoinError, ArithmeticError):
    """A matrix identity was requested where its hypotheses fail."""


class UnsupportedClassError(AlphaJoinError):
    """The closed-form engine has no formula for this input class."""


class PreconditionError(AlphaJoinError, ValueError):
    """Inputs are valid graphs but fall outside a formula's hypotheses."""
