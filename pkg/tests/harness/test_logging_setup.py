"""Test cases for logging configuration."""

import logging

import pytest

from ultralis.harness.logging_setup import LOG_FORMAT, configure_logging


@pytest.fixture(autouse=True)
def reset_logging():
    """Restore the package logger after each test."""
    yield
    logger = logging.getLogger("ultralis")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)


def test_levels():
    """Test verbosity maps to DEBUG, INFO and WARNING."""
    logger = logging.getLogger("ultralis")
    configure_logging(1)
    assert logger.level == logging.DEBUG
    configure_logging(0)
    assert logger.level == logging.INFO
    configure_logging(-1)
    assert logger.level == logging.WARNING


def test_single_handler():
    """Test repeated calls keep one handler with the shared format."""
    configure_logging(0)
    configure_logging(0)
    handlers = logging.getLogger("ultralis").handlers
    assert len(handlers) == 1
    assert handlers[0].formatter._fmt == LOG_FORMAT
