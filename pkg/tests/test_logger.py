"""
Tests for the logging setup
"""

import logging
import sys
from logging.handlers import RotatingFileHandler

from src.utils.logger import setup_logger


class TestSetupLogger:
    """Handlers of configured loggers"""

    def test_console_on_stderr(self):
        """The console handler writes to stderr at WARNING"""
        logger = setup_logger("g2lts-test-console")
        assert len(logger.handlers) == 1
        handler = logger.handlers[0]
        assert handler.stream is sys.stderr
        assert handler.level == logging.WARNING
        assert logger.propagate is False

    def test_debug_level(self):
        """DEBUG lowers the console threshold"""
        logger = setup_logger("g2lts-test-debug", level="debug")
        assert logger.level == logging.DEBUG
        assert logger.handlers[0].level == logging.DEBUG

    def test_reconfigure_replaces_handlers(self):
        """Calling setup twice does not stack handlers"""
        setup_logger("g2lts-test-twice")
        logger = setup_logger("g2lts-test-twice")
        assert len(logger.handlers) == 1

    def test_log_file(self, tmp_path):
        """A log file is created with its parent directory"""
        path = tmp_path / "logs" / "g2lts.log"
        logger = setup_logger("g2lts-test-file", log_file=str(path), max_size_mb=1)
        logger.info("constructed P0:H1")
        for handler in logger.handlers:
            handler.flush()
        rotating = [h for h in logger.handlers if isinstance(h, RotatingFileHandler)]
        assert len(rotating) == 1
        assert rotating[0].maxBytes == 1024 * 1024
        assert "constructed P0:H1" in path.read_text(encoding="utf-8")
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
