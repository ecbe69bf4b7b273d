"""Exception types."""


class ArgumentError(ValueError):
    """Exception to indicate an invalid argument value."""

    pass


class GeneratorIndexError(IndexError):
    """Exception to indicate a bit significance or generator out of range."""

    pass


class DimensionError(ValueError):
    """Exception to indicate operands built for different system sizes."""

    pass


class DistinctnessError(ValueError):
    """Exception to indicate gate bits which are not pairwise distinct."""

    pass


class UndecodableError(Exception):
    """Exception to indicate a string which no longer decodes to a number."""

    pass


class ScheduleError(ValueError):
    """Exception to indicate an invalid gate schedule."""

    pass


class CircuitParseError(ValueError):
    """Exception to indicate an issue with a circuit file."""

    def __init__(self, message, line, column=1):
        """
        Initialize the object.

        message -- description of the problem
        line -- 1-based line number
        column -- 1-based column number
        """
        ValueError.__init__(self, message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        """Format this error with its position."""
        return 'line {}, column {}: {}'.format(self.line, self.column,
                                              self.message)
