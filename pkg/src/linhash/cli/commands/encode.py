"""``linhash encode``: information frames in, codeword frames out."""

import argparse
import logging

from ...services.codec_service import CodecService
from ...services.codefile_service import CodeFileService
from ..exit_codes import ExitCode
from ..frames import StreamFormat, read_bits, split_frames, write_bits
from ..options import add_format_flag

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("encode", help="encode information frames into codewords")
    parser.add_argument("--code", required=True, help="code file")
    parser.add_argument("--in", dest="input", required=True, help="information stream")
    parser.add_argument("--out", required=True, help="codeword stream")
    add_format_flag(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec, _ = CodeFileService.load(args.code)
    fmt = StreamFormat(args.format)
    bits = read_bits(args.input, fmt)
    encoded = [str(CodecService.encode(spec, info)) for info in split_frames(bits, spec.info_bits)]
    write_bits(args.out, "".join(encoded), fmt)
    logger.info(f"Encoded {len(encoded)} frames of {spec.info_bits} bits")
    return int(ExitCode.OK)
