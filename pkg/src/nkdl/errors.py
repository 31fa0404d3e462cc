"""Exception hierarchy shared by all modules."""


class GraphError(Exception):
    """Base class for every error raised by this package."""


class OutOfRangeError(GraphError, IndexError):
    pass


class SelfLoopError(GraphError, ValueError):
    pass


class SizeLimitError(GraphError):
    """Input is larger than an exact algorithm is configured to handle."""


class RangeError(GraphError, ValueError):
    pass


class NotSubmultisetError(GraphError, ValueError):
    pass


class InvalidSwitchError(GraphError, ValueError):
    pass


class InvalidStepError(InvalidSwitchError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(f"step {index}: {message}" if message else f"step {index}")


class NotEquivalentError(GraphError):
    pass


class DiameterViolationError(GraphError):
    pass


class FallbackExhaustedError(GraphError):
    pass


class InternalMismatchError(GraphError, AssertionError):
    """Two routes that must agree produced different answers."""


class NotReachableError(GraphError):
    pass


class ParseError(GraphError, ValueError):
    pass


class BadCharError(ParseError):
    pass


class TruncatedError(ParseError):
    pass
