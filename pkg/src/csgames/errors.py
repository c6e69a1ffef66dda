"""Exception types shared across the package."""


class GameError(Exception):
    """Base class for library-specific errors."""


class ValidationError(GameError, ValueError):
    """Input violates a structural invariant.

    For invariant-matrix validation, ``violations`` carries one label per
    failed condition.
    """

    def __init__(self, message, violations=None):
        super().__init__(message)
        self.violations = list(violations or [])


class NotCompleteError(GameError, ValueError):
    """The desirability relation of the game is not total."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class CapacityError(GameError, RuntimeError):
    """Requested computation exceeds the desk-scale guardrails."""


class DomainError(GameError, ValueError):
    """Argument lies outside an operation's documented domain."""
