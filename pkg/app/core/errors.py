"""
Exception hierarchy.

Each class carries the process exit code the CLI reports for it.
"""


class SkeinError(Exception):
    exit_code = 1


class ConfigError(SkeinError):
    exit_code = 2


class CapExceededError(SkeinError):
    """A brute-force oracle was asked for more strands than its cap."""
    exit_code = 2


class InvalidTripleError(SkeinError, ValueError):
    exit_code = 3


class InvalidParamsError(SkeinError, ValueError):
    exit_code = 3


class PoleError(SkeinError, ZeroDivisionError):
    exit_code = 4


class SingularSystemError(SkeinError):
    exit_code = 4


class StrandMismatchError(SkeinError, ValueError):
    exit_code = 1
