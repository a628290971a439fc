"""Exception hierarchy.  The three intermediate classes map to CLI exit codes."""


class CommunalError(Exception):
    """Base class for every error raised by this package."""


class InvalidAlpha(CommunalError, ValueError):
    pass


class TrivialSystem(InvalidAlpha):
    """The bounds sum to at most one."""


class PartnerSumExceeded(InvalidAlpha):
    """Some k-1 of the bounds sum to more than one."""


class BadShape(InvalidAlpha):
    """Fewer than two bounds, or a nonpositive numerator/denominator."""


class CapExceeded(CommunalError):
    pass


class ResultTooLarge(CapExceeded):
    pass


class ScanCapExceeded(CapExceeded):
    pass


class InvalidTuple(CommunalError, ValueError):
    pass


class ArityMismatch(InvalidTuple):
    pass


class NotCommunal(InvalidTuple):
    pass


class ValidationFailed(CommunalError):
    """A held-out point disagreed with an interpolated quasi-polynomial."""


class OutOfValidatedRange(CommunalError, ValueError):
    pass
