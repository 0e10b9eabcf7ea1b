"""
Logging utility for g2lts
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

def setup_logger(
    name: str = "g2lts",
    log_file: Optional[str] = None,
    level: str = "INFO",
    max_size_mb: int = 10,
) -> logging.Logger:
    """
    Configure the named logger and return it.

    Console records go to stderr, at WARNING unless ``level`` is DEBUG, so
    JSON written to stdout stays parseable.  With ``log_file`` all records
    passing ``level`` also go to a file rotated at ``max_size_mb``.
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper()))

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    # Reconfiguring replaces earlier handlers instead of stacking them
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.WARNING if level.upper() != "DEBUG" else logging.DEBUG)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(log_path, maxBytes=max_size_mb * 1024 * 1024, backupCount=1)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.propagate = False
    return logger


logger = setup_logger()
