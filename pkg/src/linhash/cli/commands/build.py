"""``linhash build``: construct a code and write it to a code file."""

import argparse
import logging
from typing import Optional

from ...models.code_spec import Algorithm, BoundedWeightParams, CodeMode, CodeSpec, SyndromeTable
from ...models.distortion import DistortionSet
from ...models.errors import ValidationError
from ...services.bounded_weight_service import BoundedWeightService
from ...services.bounds import success_bound, success_bound_product
from ...services.codec_service import CodecService
from ...services.codefile_service import CodeFileService
from ...services.distortion_service import DistortionService
from ...services.general_code_service import GeneralCodeService
from ...services.input_validation_service import InputValidationService
from ..exit_codes import ExitCode
from ..options import add_model_flags, correction_radius, report_validation_error, resolve_model

logger = logging.getLogger(__name__)

ALGORITHMS = {"1": Algorithm.ALG1, "2": Algorithm.ALG2, "3": Algorithm.ALG3}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("build", help="construct a code")
    parser.add_argument("--mode", choices=[m.value for m in CodeMode], default=CodeMode.DETECT.value)
    parser.add_argument("--L", type=int, help="message length (taken from --distortions when omitted)")
    add_model_flags(parser)
    parser.add_argument("--algorithm", choices=sorted(ALGORITHMS), default="1")
    parser.add_argument("--delta", type=int, help="extra check bits for --algorithm 3")
    parser.add_argument("--seed", type=int, help="generator seed for --algorithm 3")
    parser.add_argument("--out", required=True, help="code file to write")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    mode = CodeMode(args.mode)
    L = args.L
    if L is None and args.distortions is not None:
        L = DistortionService.load_file(args.distortions).L
    checked = InputValidationService.validate_length(L)
    if isinstance(checked, ValidationError):
        return report_validation_error(checked)

    model = resolve_model(args, L)
    if isinstance(model, ValidationError):
        return report_validation_error(model)
    d, distortions = model

    algorithm = InputValidationService.validate_algorithm_flags(
        ALGORITHMS[args.algorithm], d is not None, args.delta, args.seed
    )
    if isinstance(algorithm, ValidationError):
        return report_validation_error(algorithm)
    if args.seed is not None:
        seed = InputValidationService.validate_seed(args.seed)
        if isinstance(seed, ValidationError):
            return report_validation_error(seed)

    if d is not None:
        built = _build_bounded(L, d, mode, algorithm, args)
        if isinstance(built, ValidationError):
            return report_validation_error(built)
        spec, table = built
    else:
        assert distortions is not None
        spec, table = _build_general(distortions, mode)

    CodeFileService.save(spec, table, args.out)
    print(f"l={spec.check_bits} info={spec.info_bits}")
    if algorithm is Algorithm.ALG3 and d is not None:
        delta = args.delta or 0
        bound = success_bound(L, d, delta)
        product = success_bound_product(L, d, delta)
        print(f"success_bound={bound} ({float(bound):.6f})")
        print(f"success_bound_product={product} ({float(product):.6f})")
    return int(ExitCode.OK)


def _build_bounded(
    L: int, d: int, mode: CodeMode, algorithm: Algorithm, args: argparse.Namespace
) -> tuple[CodeSpec, Optional[SyndromeTable]] | ValidationError:
    checked = InputValidationService.validate_distance(L, d)
    if isinstance(checked, ValidationError):
        return checked
    radius = correction_radius(d)
    if mode is CodeMode.CORRECT and radius < 1:
        return ValidationError(
            field_name="d",
            message=f"A distance-{d} code corrects no errors",
            remediation="Use --mode detect, or --d 3 or more for correction.",
            user_input=str(d),
        )
    seed = args.seed if args.seed is not None else 0
    params = BoundedWeightParams(L=L, d=d, delta=args.delta or 0, seed=seed)
    h, trace = BoundedWeightService.construct(algorithm, params)
    spec = BoundedWeightService.to_code_spec(h, trace, d, mode)
    if mode is CodeMode.DETECT:
        return spec, None
    ball = DistortionSet.weight_ball(L, radius)
    provenance = dict(spec.provenance, distortions=ball.descriptor)
    spec = CodeSpec(spec.hash, spec.check_positions, mode, provenance)
    return spec, CodecService.build_syndrome_table(spec, ball)


def _build_general(distortions: DistortionSet, mode: CodeMode) -> tuple[CodeSpec, Optional[SyndromeTable]]:
    result = GeneralCodeService.construct(distortions, mode)
    spec = result.to_code_spec()
    if mode is CodeMode.DETECT:
        return spec, None
    return spec, CodecService.build_syndrome_table(spec, distortions)
