"""Exception types shared across the engines, solvers and harnesses."""

from __future__ import annotations


class PuzzleError(Exception):
    """Base class for all library errors."""


class ParseError(PuzzleError):
    """Raised when an action token or transcript is malformed.

    `offset` is the byte offset of the first violating character in the
    input string.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class IllegalAction(PuzzleError):
    """Raised by an engine when a parsed action cannot be applied."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class SamplingExhausted(PuzzleError):
    """Raised when rejection sampling runs out of retries for a seed."""


class ReplayMismatch(PuzzleError):
    """A supposedly-valid solution failed replay: solver/engine divergence."""


class AlignmentError(PuzzleError):
    """Transcript list and instance list do not line up one-to-one."""


class Unsolvable(PuzzleError):
    """Search space exhausted with no goal state."""

    def __init__(self, message: str = "no solution exists", expansions: int = 0):
        super().__init__(message)
        self.expansions = expansions


class BudgetExceeded(PuzzleError):
    """Search hit the hard expansion cap before finishing."""
