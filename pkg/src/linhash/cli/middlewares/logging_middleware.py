import argparse
import logging
from collections.abc import Callable

from ...models.errors import LinHashError

logger = logging.getLogger(__name__)

_HIDDEN = {"handler", "command"}


class LoggingMiddleware:
    """Wraps every command handler.

    Logs:
    - The command name and the flags that were set
    - The exit status
    - Errors (domain errors as warnings, anything else with a traceback)
    """

    def __call__(self, handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
        """Run the handler and log around it."""
        flags = {k: v for k, v in vars(args).items() if k not in _HIDDEN and v is not None and v is not False}
        logger.info(f"Command {args.command}: {flags}")
        try:
            status = handler(args)
        except LinHashError as e:
            logger.warning(f"Command {args.command} stopped: {type(e).__name__}: {e}")
            raise
        except Exception as e:
            logger.error(f"Error running {args.command}: {type(e).__name__}: {str(e)}", exc_info=True)
            raise
        logger.info(f"Command {args.command} finished with exit status {int(status)}")
        return status
