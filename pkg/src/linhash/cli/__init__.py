"""Command-line interface."""

from .app import build_parser, run_cli
from .exit_codes import ExitCode

__all__ = ["ExitCode", "build_parser", "run_cli"]
