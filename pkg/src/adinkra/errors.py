"""Exception types shared across the package."""


class AdinkraError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(AdinkraError):
    """A graph file or graph description violates the input format."""


class BudgetError(AdinkraError):
    """A search would exceed its enumeration budget."""

    def __init__(self, required: int, budget: int, what: str = "search"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} needs {required} enumeration steps, budget is {budget}"
        )
