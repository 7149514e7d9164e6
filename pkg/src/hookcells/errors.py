"""Exception types raised across the package."""


class HookCellsError(ValueError):
    """Base class for all domain errors."""


class EmptyInput(HookCellsError):
    pass


class NonUnimodalShape(HookCellsError):
    """Sequence is not the Hilbert function of a graded height-two quotient."""


class BoxOverflow(HookCellsError):
    """A hook code block does not fit its box."""


class DegreeOutOfRange(HookCellsError):
    pass


class NotSingleBlock(HookCellsError):
    pass


class EmptyBlock(HookCellsError):
    pass


class InvalidShape(HookCellsError):
    pass


class ArityMismatch(HookCellsError):
    pass


class DegreeTooSmall(HookCellsError):
    pass


class BudgetExhausted(HookCellsError):
    """No accepted cell point was found within the tuple budget."""


class ParseError(HookCellsError):
    """Malformed text input; ``position`` is the 0-based character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
