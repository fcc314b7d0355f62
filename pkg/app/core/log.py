"""
Console loggers.

Every area logs to stderr through its own tagged logger so stdout stays
reserved for JSON / CSV / SVG payloads.
"""
import logging
import os
import sys


def _level() -> int:
    name = os.getenv("SKEIN_LOG_LEVEL", "INFO").strip().upper()
    return getattr(logging, name, logging.INFO)


def get_logger(name: str, tag: str) -> logging.Logger:
    """Return a stderr logger whose lines read 'LEVEL: [TAG] message'."""
    logger = logging.getLogger(name)
    logger.setLevel(_level())
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(logging.DEBUG)
        formatter = logging.Formatter(f'%(levelname)s: [{tag}] %(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.propagate = False
    return logger
