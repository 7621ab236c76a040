"""The project exceptions
"""


class FdcmssError(Exception):
    """Base class for all the errors raised by the package.
    """


class ConfigurationError(FdcmssError, ValueError):
    """Raised when the parameters of a sketch or an experiment are not valid.
    """


class DecayDomainError(FdcmssError, ValueError):
    """Raised when a timestamp lies outside the domain of the decay function.
    """


class DecayOverflowError(FdcmssError, OverflowError):
    """Raised when a raw decayed weight cannot be represented as a finite number.
    """


class UnsupportedOperationError(FdcmssError, NotImplementedError):
    """Raised when an operation is not available for the configured decay function.
    """


class OutOfOrderError(FdcmssError, ValueError):
    """Raised when items with decreasing timestamps are fed to a backward decay sketch.
    """


class InputError(FdcmssError):
    """Base class for errors in input files.
    """


class InputParseError(InputError, ValueError):
    """Raised when an item file cannot be parsed.
    """
    def __init__(self, message: str, line: int | None = None):
        """Create the error.

        :param message: The error message.
        :param line: The 1-based line number where the error was found.
        """
        super().__init__(message if line is None else f"{message} (line {line})")
        self.line = line


class SnapshotFormatError(InputError, ValueError):
    """Raised when a sketch snapshot is malformed.
    """
