"""``linhash simulate``: send random frames through a distortion channel and tally decoder outcomes.

Each frame is corrupted with probability ``p`` by a member of the distortion model chosen uniformly.
The model comes from the flags, or from the code file's metadata when no model flag is given.
"""

import argparse
import logging
from collections import Counter
from typing import Optional

import numpy as np

from ...models.bitword import BitWord, random_value
from ...models.code_spec import CodeMode, CodeSpec, DecodeStatus, SyndromeTable
from ...models.distortion import DistortionSet
from ...models.errors import ValidationError
from ...services.codec_service import CodecService
from ...services.codefile_service import CodeFileService
from ...services.input_validation_service import InputValidationService
from ..exit_codes import ExitCode
from ..options import add_model_flags, correction_radius, report_validation_error, resolve_model
from .decode import syndrome_table_for

logger = logging.getLogger(__name__)

COUNTERS = ("frames", "corrupted", "detected", "missed", "corrected", "uncorrectable", "miscorrected")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("simulate", help="tally decoder outcomes over a distortion channel")
    parser.add_argument("--code", required=True, help="code file")
    add_model_flags(parser)
    parser.add_argument("--frames", type=int, default=1000, help="number of frames to send")
    parser.add_argument("--error-prob", type=float, required=True, help="probability that a frame is distorted")
    parser.add_argument("--seed", type=int, required=True, help="generator seed")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, stored = CodeFileService.load(args.code)
    for checked in (
        InputValidationService.validate_count("frames", args.frames),
        InputValidationService.validate_probability(args.error_prob),
        InputValidationService.validate_seed(args.seed),
    ):
        if isinstance(checked, ValidationError):
            return report_validation_error(checked)

    channel = _channel_model(spec, args)
    if isinstance(channel, ValidationError):
        return report_validation_error(channel)
    table = syndrome_table_for(spec, stored, args.code) if spec.mode is CodeMode.CORRECT else None

    tally = simulate(spec, table, channel, args.frames, args.error_prob, args.seed)
    for name in COUNTERS:
        print(f"{name}={tally[name]}")
    return int(ExitCode.OK)


def _channel_model(spec: CodeSpec, args: argparse.Namespace) -> DistortionSet | ValidationError:
    model = resolve_model(args, spec.L, provenance=spec.provenance)
    if isinstance(model, ValidationError):
        return model
    d, distortions = model
    if distortions is not None:
        return distortions
    if d is not None:
        # A distance-d code detects d-1 errors and corrects (d-1)//2
        radius = d - 1 if spec.mode is CodeMode.DETECT else correction_radius(d)
        if 1 <= radius <= spec.L:
            return DistortionSet.weight_ball(spec.L, radius)
    return ValidationError(
        field_name="model",
        message=f"{args.code} records no usable distortion model",
        remediation="Pass one of --d, --distortions, --weight or --burst.",
        user_input=args.code,
    )


def simulate(
    spec: CodeSpec,
    table: Optional[SyndromeTable],
    channel: DistortionSet,
    frames: int,
    p: float,
    seed: int,
) -> Counter:
    """Send ``frames`` random information words and count decoder outcomes.

    A distorted frame reported clean is ``missed``; a corrected frame whose codeword differs from
    the one sent is ``miscorrected``.
    """
    rng = np.random.default_rng(seed)
    members = channel.as_tuple()
    tally: Counter = Counter({name: 0 for name in COUNTERS})
    for _ in range(frames):
        info = BitWord(spec.info_bits, random_value(rng, spec.info_bits))
        x = CodecService.encode(spec, info)
        corrupted = bool(rng.random() < p)
        y = x ^ members[int(rng.integers(0, len(members)))] if corrupted else x
        tally["frames"] += 1
        tally["corrupted"] += corrupted
        if spec.mode is CodeMode.DETECT:
            flagged = CodecService.detect(spec, y).status is DecodeStatus.ERROR_DETECTED
            tally["detected"] += corrupted and flagged
            tally["missed"] += corrupted and not flagged
            continue
        assert table is not None
        outcome = CodecService.correct(spec, table, y)
        if outcome.status is DecodeStatus.UNCORRECTABLE:
            tally["uncorrectable"] += 1
        elif outcome.is_clean:
            tally["missed"] += corrupted
        elif outcome.codeword == x:
            tally["corrected"] += 1
        else:
            tally["miscorrected"] += 1
    logger.info(f"Simulated {frames} frames at p={p} with seed {seed}: {dict(tally)}")
    return tally
