"""Logging configuration for the command line."""

import logging
import sys

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"


def configure_logging(verbosity: int = 0) -> None:
    """
    Install a single stderr handler on the ``ultralis`` logger.

    Args:
        verbosity: 0 for INFO, positive for DEBUG, negative for WARNING
    """
    if verbosity > 0:
        level = logging.DEBUG
    elif verbosity < 0:
        level = logging.WARNING
    else:
        level = logging.INFO
    root = logging.getLogger("ultralis")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
