"""Exception types shared across the package."""


class BTableauxError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(BTableauxError, ArithmeticError):
    pass


class BadLowestTerms(BTableauxError, ValueError):
    pass


class LimitExceeded(BTableauxError):
    """An exhaustive enumeration was requested above the configured bound."""


class InvalidTableau(BTableauxError, ValueError):
    pass


class BadGround(BTableauxError, ValueError):
    pass


class PrecondFirstNegative(BTableauxError, ValueError):
    pass


class StructureViolation(BTableauxError):
    pass


class InvalidPath(BTableauxError, ValueError):
    pass


class RelationViolated(BTableauxError):
    pass


class TruncationTooSmall(BTableauxError, ValueError):
    pass


class ParseError(BTableauxError, ValueError):
    pass
