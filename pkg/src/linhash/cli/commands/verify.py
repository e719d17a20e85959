"""``linhash verify``: run the oracles against a code file."""

import argparse
import sys

from ...models.code_spec import CodeMode
from ...models.distortion import DistortionSet
from ...models.errors import LinHashError, ValidationError
from ...services.codefile_service import CodeFileService
from ...services.input_validation_service import InputValidationService
from ...services.verification_service import VerificationService
from ..exit_codes import ExitCode
from ..options import add_model_flags, correction_radius, report_validation_error, resolve_model


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="check a code file with the brute-force oracles")
    parser.add_argument("--code", required=True, help="code file")
    add_model_flags(parser)
    parser.add_argument("--exhaustive", action="store_true", help="refuse to sample; fail if too large")
    parser.add_argument("--seed", type=int, default=0, help="round-trip generator seed")
    parser.add_argument("--trials", type=int, help="round-trip trial count")
    parser.add_argument("--report", choices=["text", "kv"], default="text", help="report layout")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    try:
        spec, table = CodeFileService.load(args.code)
    except (OSError, LinHashError) as e:
        print(f"linhash: cannot load {args.code}: {e}", file=sys.stderr)
        return int(ExitCode.VERIFICATION_FAILED)

    for checked in (
        InputValidationService.validate_seed(args.seed),
        InputValidationService.validate_count("trials", args.trials) if args.trials is not None else None,
    ):
        if isinstance(checked, ValidationError):
            return report_validation_error(checked)

    model = resolve_model(args, spec.L, provenance=spec.provenance)
    if isinstance(model, ValidationError):
        return report_validation_error(model)
    d, distortions = model
    if d is not None:
        checked = InputValidationService.validate_distance(spec.L, d)
        if isinstance(checked, ValidationError):
            return report_validation_error(checked)
        if distortions is None and spec.mode is CodeMode.CORRECT and correction_radius(d) >= 1:
            distortions = DistortionSet.weight_ball(spec.L, correction_radius(d))
    if d is None and distortions is None:
        return report_validation_error(
            ValidationError(
                field_name="model",
                message=f"{args.code} records no distance or distortion set",
                remediation="Pass one of --d, --distortions, --weight or --burst.",
                user_input=args.code,
            )
        )

    report = VerificationService.verify_code(
        spec,
        d=d,
        distortions=distortions,
        table=table,
        exhaustive=args.exhaustive,
        trials=args.trials,
        seed=args.seed,
    )
    print(report.to_text() if args.report == "text" else report.to_key_values())
    return int(ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILED)
