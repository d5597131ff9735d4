"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when a graph file cannot be parsed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ComputationCancelled(RuntimeError):
    """Raised inside a kernel when a cooperative stop was requested."""


class UnknownNodeError(KeyError):
    """Raised when a node label is not present in a graph."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(label)

    def __str__(self) -> str:
        return f"unknown node label: {self.label!r}"
