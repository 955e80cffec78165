"""Exception hierarchy shared by all modules."""


class BchError(Exception):
    """Base class for every error raised by :mod:`qbch`."""


class NotPrime(BchError, ValueError):
    pass


class NotPrimePower(BchError, ValueError):
    pass


class FieldTooLarge(BchError, ValueError):
    pass


class FieldMismatch(BchError, TypeError):
    pass


class DivisionByZero(BchError, ZeroDivisionError):
    pass


class WrongOrder(BchError, ValueError):
    pass


class CoefficientOutsideSubfield(BchError, ValueError):
    pass


class NotCoprime(BchError, ValueError):
    pass


class DeltaOutOfRange(BchError, ValueError):
    pass


class HypothesisViolated(BchError, ValueError):
    """A theorem-backed operation was called outside the theorem's hypotheses."""


class NotApplicable(HypothesisViolated):
    """The requested threshold is explicitly excluded for these parameters."""


class NotNested(BchError, ValueError):
    pass
