import logging
from rich.logging import RichHandler
from rich.console import Console
from config import QMONO_LOG_LEVEL

LOGGER_NAME = "qmono"

_configured = False


def get_logger() -> logging.Logger:
    """Returns the package logger, attaching a stderr rich handler on first use."""
    global _configured
    logger = logging.getLogger(LOGGER_NAME)
    if not _configured:
        handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.setLevel(QMONO_LOG_LEVEL.upper())
        logger.propagate = False
        _configured = True
    return logger


def set_level(level: str):
    get_logger().setLevel(level.upper())
