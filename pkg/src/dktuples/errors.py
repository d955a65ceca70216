"""Exception types shared across the package."""


class InvalidParameter(ValueError):
    """An argument is outside the domain of the operation."""


class PreconditionFailed(ValueError):
    """Inputs are well-typed but violate a mathematical hypothesis.

    ``offending`` carries the value that broke the hypothesis (for example
    the product ``ac + n`` that is not a k-th power).
    """

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class SearchBudgetExceeded(RuntimeError):
    """A search ran past its node budget.

    Attributes:
        partial: records found for every completed first element.
        checkpoint: a :class:`~dktuples.tuples.Checkpoint` to resume from.
    """

    def __init__(self, message, partial, checkpoint):
        super().__init__(message)
        self.partial = partial
        self.checkpoint = checkpoint
