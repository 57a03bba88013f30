"""Exception hierarchy shared by the library and the command line."""


class LapmaxError(Exception):
    """Base class for every error raised by lapmax."""


class InputError(LapmaxError, ValueError):
    """Malformed or out-of-range input."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(LapmaxError, ValueError):
    """Input is well formed but outside an operation's domain."""


class DisconnectedGraphError(DomainError):
    pass


class SizeLimitError(DomainError):
    pass


class NotComparabilityError(DomainError):
    pass


class InconclusiveError(DomainError):
    pass


class ConsistencyError(DomainError):
    """A spectrally induced orientation failed its transitivity self-check."""


class NumericalError(LapmaxError, ArithmeticError):
    pass


class DegeneracyError(NumericalError):
    def __init__(self, message, attempts):
        self.attempts = attempts
        super().__init__(f"{message} (after {attempts} attempts)")
