"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for invalid graph input or violated preconditions."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


class DomainError(GraphError):
    """An argument refers to vertices outside the graph or is otherwise out of domain."""


class SizeError(GraphError):
    """Input too large for an exhaustive oracle."""


class ParameterError(GraphError):
    """A numeric parameter is outside its admissible range."""


class PreconditionError(GraphError):
    def __init__(self, message: str, stage: str | None = None):
        self.stage = stage
        if stage:
            message = f"[{stage}] {message}"
        super().__init__(message)


class BudgetExhausted(RuntimeError):
    """The exact clique search hit its node budget before closing."""

    def __init__(self, budget: int, best_size: int):
        self.budget = budget
        self.best_size = best_size
        super().__init__(
            f"budget exhausted after {budget} nodes (best clique so far: {best_size})")
