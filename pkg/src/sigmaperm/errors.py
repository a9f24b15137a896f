"""Exception hierarchy for sigmaperm."""

from typing import Optional


class SigmaPermError(Exception):
    """Base class for every error raised by sigmaperm."""


class InputError(SigmaPermError, ValueError):
    """Malformed or inconsistent input (exit code 2 on the command line)."""


class CycleNotationError(InputError):
    """Cycle-notation text could not be parsed into a permutation."""


class DegreeMismatchError(InputError):
    """Two permutations or groups of different degree were combined."""

    def __init__(self, left: int, right: int):
        super().__init__(f"degree mismatch: {left} != {right}")
        self.left = left
        self.right = right


class PartitionError(InputError):
    """Partition text or blocks do not form a partition of the ground set."""


class GroupFileError(InputError):
    """A group file violates the line-based format."""

    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line


class PreconditionError(InputError):
    """Subgroup or normality precondition of an operation does not hold."""


class NotSigmaSolubleError(SigmaPermError, ValueError):
    """σ-permutability was requested for a section that is not σ-soluble."""


class DeskScaleError(SigmaPermError, RuntimeError):
    """A configured desk-scale cap was exceeded (exit code 3)."""


class SeriesNotFoundError(DeskScaleError):
    """Random sampling could not produce a chief series step."""


class InvariantViolation(SigmaPermError, AssertionError):
    """A structural guard fired; this always indicates a bug."""
