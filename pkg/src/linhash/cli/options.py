"""Flags shared by several commands, and their resolution into domain objects."""

import argparse
import sys
from collections.abc import Mapping
from typing import Optional

from ..models.distortion import DistortionSet
from ..models.errors import ValidationError
from ..services.distortion_service import DistortionService
from ..services.input_validation_service import InputValidationService
from .exit_codes import ExitCode
from .frames import StreamFormat


def add_model_flags(parser: argparse.ArgumentParser, with_distance: bool = True) -> None:
    if with_distance:
        parser.add_argument("--d", type=int, help="minimum distance of a bounded-weight code")
    parser.add_argument("--distortions", help="distortion-set file ('L <n>' then one word per line)")
    parser.add_argument("--weight", type=int, help="every nonzero word of weight <= t")
    parser.add_argument("--burst", help="bursts of length b, variant strict or general (default general)")


def add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in StreamFormat],
        default=StreamFormat.BYTES.value,
        help="raw bytes (MSB first) or text of 0/1 digits",
    )


def correction_radius(d: int) -> int:
    return (d - 1) // 2


def resolve_model(
    args: argparse.Namespace, L: int, provenance: Optional[Mapping[str, str]] = None
) -> tuple[Optional[int], Optional[DistortionSet]] | ValidationError:
    """Turn the model flags into ``(d, distortions)``.

    With no model flag, falls back to the ``d`` and ``distortions`` entries of a code file's
    metadata when ``provenance`` is given.
    """
    d = getattr(args, "d", None)
    selected = InputValidationService.validate_model_choice(
        d, args.distortions, args.weight, args.burst, required=provenance is None
    )
    if isinstance(selected, ValidationError):
        return selected
    if selected is None:
        stored_d = provenance.get("d") if provenance else None
        descriptor = provenance.get("distortions") if provenance else None
        distortions = DistortionService.from_descriptor(descriptor, L) if descriptor else None
        return (int(stored_d) if stored_d and stored_d.isdigit() else None), distortions
    if selected == "d":
        return d, None
    if selected == "distortions":
        distortions = DistortionService.load_file(args.distortions)
        if distortions.L != L:
            return ValidationError(
                field_name="distortions",
                message=f"Distortions in {args.distortions} have length {distortions.L}, expected {L}",
                remediation="Use a distortion file whose header matches the message length.",
                user_input=args.distortions,
            )
        return None, distortions
    if selected == "weight":
        return None, DistortionSet.weight_ball(L, args.weight)
    return None, DistortionService.parse_burst(args.burst, L)


def report_validation_error(error: ValidationError) -> int:
    """Print a flag error with its remediation and return the usage exit status."""
    print(f"linhash: {error}", file=sys.stderr)
    return int(ExitCode.USAGE)
