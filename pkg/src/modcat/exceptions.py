class ModcatError(ValueError):
    """Base class for every error raised by this package."""


class ValidationError(ModcatError):
    """An input sequence violates a structural invariant.

    ``index`` is the first position at which the violation was detected, or
    ``None`` when the problem is global (wrong length, wrong total).
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ParseError(ModcatError):
    """Text input could not be parsed; ``position`` is a 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PatternMismatchError(ModcatError):
    """A rotation or slide was requested at a site where it does not apply."""


class OracleBoundError(ModcatError):
    """An exhaustive oracle was asked for a size beyond its configured bound."""
