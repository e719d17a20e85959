import logging
import sys
from collections.abc import Sequence
from typing import Optional

from .cli import run_cli
from .config import get_settings

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the ``linhash`` command."""
    settings = get_settings()

    # Logs go to stderr; stdout carries command output only
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    return run_cli(argv)


def run() -> None:
    """Console-script entry point."""
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        sys.exit(130)


if __name__ == "__main__":
    run()
