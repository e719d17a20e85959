from enum import IntEnum


class ExitCode(IntEnum):
    """Process exit statuses of the ``linhash`` command."""

    OK = 0
    USAGE = 1
    NO_SOLUTION = 2
    CONSTRUCTION_FAILED = 3
    VERIFICATION_FAILED = 4
    UNDELIVERED_FRAMES = 5
