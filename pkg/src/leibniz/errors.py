"""Exception types raised across the package."""


class LeibnizError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatch(LeibnizError, ValueError):
    pass


class NotLeftLeibniz(LeibnizError):
    pass


class NotLie(LeibnizError):
    pass


class NotAnIdeal(LeibnizError):
    pass


class NotSolvable(LeibnizError):
    pass


class NotEngelNilpotent(LeibnizError):
    """Some left multiplication is not nilpotent."""


class NotSplitOverField(LeibnizError):
    """A needed eigenvalue is not rational."""


class NilradicalUnverified(LeibnizError):
    """The computed nilradical failed its post-verification."""


class SplittingFailed(LeibnizError):
    """A Levi splitting system turned out inconsistent."""


class NoMatch(LeibnizError):
    pass


class VerificationError(LeibnizError):
    """An internal consistency check failed."""


class ParseError(LeibnizError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
