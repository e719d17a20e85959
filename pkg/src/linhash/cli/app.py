"""Argument parsing and dispatch for the ``linhash`` command."""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import NoReturn, Optional

from .. import __version__
from ..models.errors import (
    ChoiceSetEmptyError,
    ConstructionFailedError,
    InvariantViolationError,
    LinHashError,
    NoSolutionError,
    OracleDisagreementError,
    SyndromeCollisionError,
)
from .commands import COMMANDS
from .exit_codes import ExitCode
from .middlewares import LoggingMiddleware

logger = logging.getLogger(__name__)

# First match wins; anything else derived from LinHashError is a usage error.
EXIT_CODES: tuple[tuple[type[Exception], ExitCode], ...] = (
    (NoSolutionError, ExitCode.NO_SOLUTION),
    (ConstructionFailedError, ExitCode.CONSTRUCTION_FAILED),
    (ChoiceSetEmptyError, ExitCode.CONSTRUCTION_FAILED),
    (SyndromeCollisionError, ExitCode.VERIFICATION_FAILED),
    (OracleDisagreementError, ExitCode.VERIFICATION_FAILED),
    (InvariantViolationError, ExitCode.VERIFICATION_FAILED),
)


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with ``ExitCode.USAGE``."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(int(ExitCode.USAGE), f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="linhash",
        description="Build, apply and verify codes defined by linear hash functions over GF(2).",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def exit_code_for(error: Exception) -> ExitCode:
    for kind, code in EXIT_CODES:
        if isinstance(error, kind):
            return code
    return ExitCode.USAGE


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the selected command through the logging middleware and return its exit status."""
    args = build_parser().parse_args(argv)
    middleware = LoggingMiddleware()
    try:
        return int(middleware(args.handler, args))
    except (LinHashError, ValueError, OSError) as e:
        print(f"linhash: error: {e}", file=sys.stderr)
        return int(exit_code_for(e))
