"""Exception types shared across the package."""


class InvalidParameter(ValueError):
    """A size, id, block or option outside its documented domain."""


class NotConnected(ValueError):
    """A distance-based operation was given a disconnected graph."""


class ParseError(ValueError):
    """Malformed edge-list, labeling or block-DSL input."""


class SingleBlockError(InvalidParameter):
    """A theorem formula was asked about a one-block collection."""


class BudgetExceeded(RuntimeError):
    """The solver examined more subsets than its configured cap allows."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} subsets exceeded")
        self.budget = budget
