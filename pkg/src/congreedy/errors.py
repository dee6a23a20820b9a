"""Exception hierarchy shared across the package."""


class CongreedyError(Exception):
    """Base class for all domain errors raised by this package."""


class GraphParseError(CongreedyError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidInputError(CongreedyError):
    """A precondition on a graph, ordering or colouring does not hold."""


class BudgetExhausted(CongreedyError):
    """An exact search ran out of its node or time budget.

    Never a substitute for an answer: callers must treat it as "unknown".
    """


class NotPerfectError(CongreedyError):
    """A step that only succeeds on perfect graphs failed."""
