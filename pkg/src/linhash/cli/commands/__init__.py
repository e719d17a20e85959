"""CLI subcommands. Each module exposes ``register(subparsers)`` and ``handle(args) -> int``."""

from . import bounds, build, decode, encode, simulate, verify

COMMANDS = (build, encode, decode, verify, bounds, simulate)

__all__ = ["COMMANDS"]
