"""Exception types raised by the library."""


class ATRError(ValueError):
    """Base class for all library errors."""


class AffixParseError(ATRError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class QueryError(ATRError):
    """The query cannot be compiled."""


class DomainError(ATRError):
    """A pattern uses characters the probability model does not cover."""
