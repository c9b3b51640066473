"""Shared exception types."""


class SlowSeqError(Exception):
    """Base class for all library errors."""


class InvalidRecurrenceError(SlowSeqError, ValueError):
    """A coefficient vector violates the admissibility rules.

    The ``reason`` attribute carries a stable machine-readable code:
    ``empty``, ``negative-coefficient``, ``leading-zero``, ``trailing-zero``,
    or ``order-one-too-small``.
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class BudgetExceededError(SlowSeqError):
    """A node or index budget would be exceeded."""


class CapacityError(SlowSeqError, ValueError):
    """A labeling or pruning request does not fit the given tree."""


class InvalidDigitsError(SlowSeqError, ValueError):
    """A digit sequence is not valid for the given recurrence."""


class IllFormedEvaluationError(SlowSeqError):
    """A nested argument fell outside [1, n-1] during evaluation.

    Indicates a wrong initial-condition horizon or an invalid recurrence;
    never expected for validated inputs.
    """
