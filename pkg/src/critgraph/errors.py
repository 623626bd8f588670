"""Exception types shared across the package."""


class CritGraphError(Exception):
    """Base class for all library errors."""


class DisconnectedInputError(CritGraphError):
    """Operation requires a connected graph."""


class TooSmallError(CritGraphError):
    """Graph has fewer vertices than the operation supports."""


class SameVertexError(CritGraphError):
    """Two distinct vertices were required."""


class EdgeAbsentError(CritGraphError):
    """Referenced edge is not in the graph."""


class NotTwoConnectedError(CritGraphError):
    """Operation requires a 2-connected graph."""


class BadAnchorError(CritGraphError):
    """Anchor cycle is not induced, not a cycle, or separates the graph."""


class HypothesisViolatedError(CritGraphError):
    """Input fails the hypotheses the operation's guarantee depends on."""


class NotFoundError(CritGraphError):
    """Search completed without a result (unchecked mode only)."""


class NotCriticalError(CritGraphError):
    """Graph is not k-critical for the requested k."""


class NoTwoCutError(CritGraphError):
    """Graph has no 2-cut."""


class BudgetExceededError(CritGraphError):
    """Enumeration exceeded the configured budget; exact counting refused."""


class ScaleGuardError(CritGraphError):
    """Requested size exceeds the supported desk scale."""


class BadParametersError(CritGraphError):
    """Constructor parameters out of range."""


class UnknownCheckError(CritGraphError):
    """No check registered under the given name."""


class ParseError(CritGraphError):
    """Malformed input file.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
