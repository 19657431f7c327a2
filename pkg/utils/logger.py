# File: utils/logger.py
"""Logging configuration"""
import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Dict

ROOT_LOGGER = "exactla"

# extra fields copied into structured records when present
STRUCTURED_FIELDS = ("command", "order", "prime", "iteration", "seed", "duration")


class JSONFormatter(logging.Formatter):
    """JSON formatter for structured logging"""

    def format(self, record):
        log_entry = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno
        }

        for name in STRUCTURED_FIELDS:
            if hasattr(record, name):
                log_entry[name] = getattr(record, name)

        return json.dumps(log_entry, default=str)


def setup_logging(config: Dict[str, Any] = None) -> logging.Logger:
    """Setup logging configuration.

    Results go to stdout, so every handler here writes to stderr or a file.
    """
    if config is None:
        config = {
            'level': 'WARNING',
            'file_enabled': False,
            'file_path': 'exactla.log',
            'console_enabled': True,
            'format': 'standard'
        }

    level = getattr(logging, str(config.get('level', 'WARNING')).upper(), logging.WARNING)

    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level)
    logger.handlers.clear()
    logger.propagate = False

    if config.get('format') == 'json':
        formatter = JSONFormatter()
    else:
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

    if config.get('console_enabled', True):
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    if config.get('file_enabled', False):
        file_handler = logging.FileHandler(config.get('file_path', 'exactla.log'))
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Get logger instance"""
    return logging.getLogger(f'{ROOT_LOGGER}.{name}')
