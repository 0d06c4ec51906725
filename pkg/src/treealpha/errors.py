"""Exception types shared across the library."""


class GraphError(ValueError):
    """Invalid graph data: out-of-range vertex, self-loop, bad parameters."""


class CapExceededError(RuntimeError):
    """An exact computation was refused because the instance exceeds its size cap.

    Exact solvers never fall back to approximation; callers must raise the cap
    explicitly if they accept the cost.
    """


class InvalidDecompositionError(ValueError):
    """An operation required a valid tree decomposition and validation failed."""

    def __init__(self, report, message="decomposition failed validation"):
        self.report = report
        super().__init__(f"{message}: {report}")


class ResidualBoundViolation(RuntimeError):
    """A bag's residual part contains an independent set larger than the promised bound."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ParseError(ValueError):
    """Malformed input file."""

    def __init__(self, source, line_no, message):
        self.source = source
        self.line_no = line_no
        super().__init__(f"{source}:{line_no}: {message}")
