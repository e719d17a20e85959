"""Validation of command-line flag values and combinations.

Framework-agnostic: every check returns the validated value or a ValidationError carrying
remediation guidance, never raises.
"""

from typing import Optional

from ..models.code_spec import Algorithm
from ..models.errors import ValidationError


class InputValidationService:
    """Flag checks shared by the CLI commands."""

    @staticmethod
    def validate_length(L: Optional[int]) -> int | ValidationError:
        """Validate ``--L`` (message length, at least 2)."""
        if L is None:
            return ValidationError(
                field_name="L",
                message="Message length is required",
                remediation="Pass --L <n> with n >= 2.\nExample: --L 7",
            )
        if L < 2:
            return ValidationError(
                field_name="L",
                message=f"Message length must be at least 2, got {L}",
                remediation="A code needs at least one check and one information symbol.",
                user_input=str(L),
            )
        return L

    @staticmethod
    def validate_distance(L: int, d: int) -> int | ValidationError:
        """Validate ``--d`` against ``2 <= d < L``."""
        if not 2 <= d < L:
            return ValidationError(
                field_name="d",
                message=f"Distance must satisfy 2 <= d < L, got d={d} with L={L}",
                remediation=f"Choose d between 2 and {L - 1}, or increase --L.",
                user_input=str(d),
            )
        return d

    @staticmethod
    def validate_model_choice(
        d: Optional[int],
        distortions: Optional[str],
        weight: Optional[int],
        burst: Optional[str],
        required: bool = True,
    ) -> Optional[str] | ValidationError:
        """Exactly one of ``--d``, ``--distortions``, ``--weight``, ``--burst``.

        Returns:
            The name of the selected flag (None when nothing was selected and none is required)
        """
        given = [
            name
            for name, value in (("d", d), ("distortions", distortions), ("weight", weight), ("burst", burst))
            if value is not None
        ]
        if len(given) > 1:
            return ValidationError(
                field_name=given[1],
                message=f"Flags --{given[0]} and --{given[1]} cannot be combined",
                remediation="Use --d for a minimum-distance code, or one of --distortions/--weight/--burst "
                "for a code built for a distortion set.",
            )
        if not given:
            if not required:
                return None
            return ValidationError(
                field_name="d",
                message="No error model selected",
                remediation="Pass one of --d <n>, --distortions <path>, --weight <t> or --burst <b>[:strict|general].",
            )
        return given[0]

    @staticmethod
    def validate_algorithm_flags(
        algorithm: Algorithm, uses_distance: bool, delta: Optional[int], seed: Optional[int]
    ) -> Algorithm | ValidationError:
        """Check that ``--algorithm``, ``--delta`` and ``--seed`` fit together."""
        if not uses_distance and algorithm is not Algorithm.ALG1:
            return ValidationError(
                field_name="algorithm",
                message="--algorithm applies to minimum-distance codes only",
                remediation="Drop --algorithm, or build with --d instead of a distortion set.",
                user_input=algorithm.value,
            )
        if algorithm is Algorithm.ALG3 and seed is None:
            return ValidationError(
                field_name="seed",
                message="The randomized construction needs an explicit seed",
                remediation="Pass --seed <n> together with --algorithm 3.",
            )
        if algorithm is not Algorithm.ALG3 and delta:
            return ValidationError(
                field_name="delta",
                message="--delta applies to the randomized construction only",
                remediation="Use --algorithm 3 with --delta, or drop --delta.",
                user_input=str(delta),
            )
        if delta is not None and delta < 0:
            return ValidationError(
                field_name="delta",
                message=f"delta must be nonnegative, got {delta}",
                remediation="Pass --delta 0 or a larger value.",
                user_input=str(delta),
            )
        return algorithm

    @staticmethod
    def validate_probability(p: float) -> float | ValidationError:
        if not 0.0 <= p <= 1.0:
            return ValidationError(
                field_name="error-prob",
                message=f"Error probability must be between 0 and 1, got {p}",
                remediation="Example: --error-prob 0.3",
                user_input=str(p),
            )
        return p

    @staticmethod
    def validate_count(name: str, value: int) -> int | ValidationError:
        """Nonnegative counts such as ``--frames`` and ``--trials``."""
        if value < 0:
            return ValidationError(
                field_name=name,
                message=f"--{name} must be nonnegative, got {value}",
                remediation=f"Pass --{name} 0 or a larger value.",
                user_input=str(value),
            )
        return value

    @staticmethod
    def validate_seed(seed: int) -> int | ValidationError:
        if seed < 0:
            return ValidationError(
                field_name="seed",
                message=f"Seed must be nonnegative, got {seed}",
                remediation="Pass --seed <n> with n >= 0.",
                user_input=str(seed),
            )
        return seed
