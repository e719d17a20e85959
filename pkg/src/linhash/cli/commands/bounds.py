"""``linhash bounds``: check-bit counts and success bounds without building a code."""

import argparse
from fractions import Fraction

from ...models.errors import ValidationError
from ...services.bounds import (
    check_bits_improved,
    check_bits_vg,
    improvement_applies,
    success_bound,
    success_bound_product,
    vg_bound,
    vg_sum,
    z_size,
)
from ...services.input_validation_service import InputValidationService
from ..exit_codes import ExitCode
from ..options import report_validation_error


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bounds", help="print check-bit counts and success bounds")
    parser.add_argument("--L", type=int, required=True, help="message length")
    parser.add_argument("--d", type=int, required=True, help="minimum distance")
    parser.add_argument("--delta", type=int, default=0, help="extra check bits of the randomized construction")
    parser.set_defaults(handler=handle)


def _fraction(value: Fraction) -> str:
    return f"{value} ({float(value):.6f})"


def handle(args: argparse.Namespace) -> int:
    for checked in (
        InputValidationService.validate_length(args.L),
        InputValidationService.validate_distance(args.L, args.d),
    ):
        if isinstance(checked, ValidationError):
            return report_validation_error(checked)
    if args.delta < 0:
        return report_validation_error(
            ValidationError(
                field_name="delta",
                message=f"--delta must be nonnegative, got {args.delta}",
                remediation="Pass --delta 0 or more.",
                user_input=str(args.delta),
            )
        )

    L, d = args.L, args.d
    print(f"vg_size={vg_bound(L, d)}")
    print(f"ball_sum={vg_sum(L, d)}")
    print(f"l_vg={check_bits_vg(L, d)}")
    print(f"l_improved={check_bits_improved(L, d)}")
    applies = improvement_applies(L, d)
    print(f"improvement={'yes' if applies else 'no'}")
    if applies:
        print(f"z_size={z_size(L, d)}")
    print(f"success_bound={_fraction(success_bound(L, d, args.delta))}")
    print(f"success_bound_product={_fraction(success_bound_product(L, d, args.delta))}")
    return int(ExitCode.OK)
