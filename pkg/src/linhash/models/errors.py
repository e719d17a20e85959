"""Error models for code construction, coding and persistence."""

from dataclasses import dataclass
from typing import Any, Optional


@dataclass
class ValidationError:
    """Represents a validation error with field context and remediation guidance.

    Attributes:
        field_name: Name of the flag that failed validation (e.g., 'L', 'burst')
        message: Human-readable error message explaining what went wrong
        remediation: Guidance on how to correct the input (e.g., 'Pass --seed together with --algorithm 3')
        user_input: Optional original input that caused the error
    """

    field_name: str
    message: str
    remediation: str
    user_input: Optional[str] = None

    def __str__(self) -> str:
        """Return formatted error message for display to user."""
        return f"{self.message}\n\n{self.remediation}"


class LinHashError(Exception):
    """Base class for every error raised by linhash."""


class WordLengthError(LinHashError, ValueError):
    """A word has the wrong length, an invalid digit, or an out-of-range position."""


class NoSolutionError(LinHashError):
    """The check-bit formula gives ``l >= L``: the solution does not exist."""

    def __init__(self, L: int, check_bits: int, reason: str = "") -> None:
        self.L = L
        self.check_bits = check_bits
        detail = f" ({reason})" if reason else ""
        super().__init__(f"No solution: l={check_bits} is not below L={L}{detail}")


class ChoiceSetEmptyError(LinHashError):
    """No admissible hash value exists at a construction step."""

    def __init__(self, step: int, message: str = "") -> None:
        self.step = step
        super().__init__(message or f"Choice set is empty at step i={step}")


class InternalExhaustionError(ChoiceSetEmptyError):
    """A choice set that the size argument proves nonempty turned out empty."""


class ConstructionFailedError(LinHashError):
    """A randomized construction drew a table that fails the ball check."""

    def __init__(self, seed: int, table: tuple[Any, ...], counterexample: Any = None) -> None:
        self.seed = seed
        self.table = table
        self.counterexample = counterexample
        super().__init__(f"Random construction with seed={seed} failed the ball check at {counterexample}")


class SyndromeCollisionError(LinHashError):
    """Two distortions share a syndrome, or a distortion has the zero syndrome."""

    def __init__(self, first: Any, second: Any) -> None:
        self.first = first
        self.second = second
        if second is None:
            super().__init__(f"Distortion {first} has the zero syndrome")
        else:
            super().__init__(f"Distortions {first} and {second} share a syndrome")


class DistortionSetError(LinHashError, ValueError):
    """An invalid distortion set or distortion-set file."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CodeFileParseError(LinHashError):
    """A code file could not be parsed."""

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class InvariantViolationError(LinHashError):
    """A structural invariant of a code does not hold."""

    def __init__(self, invariant: str, message: str) -> None:
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


class InstanceTooLargeError(LinHashError):
    """An exhaustive oracle was asked to enumerate beyond its size guard."""


class FrameError(LinHashError):
    """Frame misalignment or a code/mode mismatch in stream coding."""


class OracleDisagreementError(LinHashError):
    """Two independent distance oracles returned different answers."""
