"""``linhash decode``: check or correct received frames.

Detection codes emit one status letter per frame (``C`` clean, ``E`` error). Correction codes emit
the recovered information bits and write a correction log to ``--log`` (stderr by default).
Frames are handled in input order.
"""

import argparse
import logging
import sys
from pathlib import Path

from ...models.code_spec import CodeMode, CodeSpec, DecodeStatus, SyndromeTable
from ...models.errors import FrameError
from ...services.codec_service import CodecService
from ...services.codefile_service import CodeFileService
from ...services.distortion_service import DistortionService
from ..exit_codes import ExitCode
from ..frames import StreamFormat, read_bits, split_frames, write_bits
from ..options import add_format_flag

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("decode", help="detect or correct errors in codeword frames")
    parser.add_argument("--code", required=True, help="code file")
    parser.add_argument("--in", dest="input", required=True, help="received stream")
    parser.add_argument("--out", required=True, help="status stream (detect) or information stream (correct)")
    parser.add_argument("--log", help="correction log file (default: stderr)")
    parser.add_argument("--mode", choices=[m.value for m in CodeMode], help="expected code mode")
    add_format_flag(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, table = CodeFileService.load(args.code)
    if args.mode is not None and CodeMode(args.mode) is not spec.mode:
        raise FrameError(f"--mode {args.mode} does not match the {spec.mode.value} code in {args.code}")
    fmt = StreamFormat(args.format)
    frames = list(split_frames(read_bits(args.input, fmt), spec.L))
    if spec.mode is CodeMode.DETECT:
        statuses = "".join(CodecService.detect(spec, y).status.code for y in frames)
        Path(args.out).write_text(statuses + "\n", encoding="utf-8", newline="\n")
        flagged = statuses.count(DecodeStatus.ERROR_DETECTED.code)
        logger.info(f"Checked {len(frames)} frames, {flagged} flagged")
        return int(ExitCode.UNDELIVERED_FRAMES if flagged else ExitCode.OK)
    return _correct_frames(spec, syndrome_table_for(spec, table, args.code), frames, args, fmt)


def syndrome_table_for(spec: CodeSpec, table: SyndromeTable | None, path: str) -> SyndromeTable:
    if table is not None:
        return table
    descriptor = spec.provenance.get("distortions")
    if not descriptor:
        raise FrameError(f"{path} is a correction code without a syndrome table or distortion descriptor")
    return CodecService.build_syndrome_table(spec, DistortionService.from_descriptor(descriptor, spec.L))


def _correct_frames(
    spec: CodeSpec, table: SyndromeTable, frames: list, args: argparse.Namespace, fmt: StreamFormat
) -> int:
    info_bits: list[str] = []
    log_lines: list[str] = []
    uncorrectable = 0
    for index, y in enumerate(frames):
        outcome = CodecService.correct(spec, table, y)
        if outcome.status is DecodeStatus.CORRECTED:
            log_lines.append(f"frame {index}: corrected {outcome.distortion}")
            info_bits.append(str(CodecService.extract_info(spec, outcome.codeword)))
        elif outcome.status is DecodeStatus.UNCORRECTABLE:
            uncorrectable += 1
            log_lines.append(f"frame {index}: uncorrectable syndrome {outcome.syndrome}")
            info_bits.append(str(CodecService.extract_info(spec, y)))
        else:
            info_bits.append(str(CodecService.extract_info(spec, y)))
    write_bits(args.out, "".join(info_bits), fmt)
    log_text = "".join(line + "\n" for line in log_lines)
    if args.log:
        Path(args.log).write_text(log_text, encoding="utf-8", newline="\n")
    else:
        sys.stderr.write(log_text)
    corrected = len(log_lines) - uncorrectable
    logger.info(f"Decoded {len(frames)} frames, {corrected} corrected, {uncorrectable} uncorrectable")
    return int(ExitCode.UNDELIVERED_FRAMES if uncorrectable else ExitCode.OK)
