"""
Loggers for the cellnet modules.

Every module logger writes to stderr and, when LOG_TO_FILE is set, to two
rotating files under LOGS_DIR: one named after the module and the shared
cellnet.log. Nothing is written to stdout, which carries command results.
"""

import logging
import logging.handlers
import os
import sys
from pathlib import Path
from typing import Dict, Optional, Union

# Fall back to environment defaults when settings cannot be imported
try:
    from app.config.settings import Settings
    settings = Settings()
    LOGS_DIR = settings.LOGS_DIR
    DEFAULT_LOG_LEVEL = settings.LOG_LEVEL
    LOG_TO_FILE = settings.LOG_TO_FILE
except (ImportError, AttributeError):
    BASE_DIR = Path(__file__).resolve().parent.parent.parent
    LOGS_DIR = BASE_DIR / 'logs'
    DEFAULT_LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'true').lower() == 'true'
    LOGS_DIR.mkdir(exist_ok=True)

LOG_LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL
}

DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DETAILED_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'

APP_LOG_FILE = 'cellnet.log'
MAX_LOG_BYTES = 1024 * 1024
LOG_BACKUPS = 5

# Options of every logger built by get_logger, keyed by logger name
_logger_configs: Dict[str, Dict[str, Union[str, bool]]] = {}


def _rotating_handler(file_name: str, formatter: logging.Formatter, level: int) -> logging.Handler:
    handler = logging.handlers.RotatingFileHandler(
        Path(LOGS_DIR) / file_name, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS
    )
    handler.setFormatter(formatter)
    handler.setLevel(level)
    return handler


def get_logger(name: str, log_level: Optional[str] = None,
               log_to_file: Optional[bool] = None, log_to_console: Optional[bool] = None,
               detailed_format: Optional[bool] = None) -> logging.Logger:
    """
    Build (or rebuild) the logger for a module.

    Args:
        name: Logger name, normally __name__
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL; unknown names mean INFO
        log_to_file: Write <module>.log and cellnet.log, defaults to the LOG_TO_FILE setting
        log_to_console: Write to stderr, defaults to True
        detailed_format: Add file name and line number to each record

    Options left as None keep their value from an earlier call for the same name.

    Returns:
        logging.Logger: The configured logger, not propagating to the root logger
    """
    previous = _logger_configs.get(name, {})
    if log_level is None:
        log_level = previous.get('log_level', DEFAULT_LOG_LEVEL)
    if log_to_file is None:
        log_to_file = previous.get('log_to_file', LOG_TO_FILE)
    if log_to_console is None:
        log_to_console = previous.get('log_to_console', True)
    if detailed_format is None:
        detailed_format = previous.get('detailed_format', False)

    logger = logging.getLogger(name)
    for handler in list(logger.handlers):
        handler.close()
    logger.handlers.clear()

    level = LOG_LEVELS.get(log_level.upper(), logging.INFO)
    logger.setLevel(level)
    formatter = logging.Formatter(DETAILED_FORMAT if detailed_format else DEFAULT_FORMAT)

    if log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        console_handler.setLevel(level)
        logger.addHandler(console_handler)

    if log_to_file:
        os.makedirs(LOGS_DIR, exist_ok=True)
        module_file = 'main' if name == '__main__' else name.replace('.', '_')
        logger.addHandler(_rotating_handler(f"{module_file}.log", formatter, level))
        logger.addHandler(_rotating_handler(APP_LOG_FILE, formatter, level))

    logger.propagate = False

    _logger_configs[name] = {
        'log_level': log_level,
        'log_to_file': log_to_file,
        'log_to_console': log_to_console,
        'detailed_format': detailed_format,
    }
    return logger


def set_log_level(log_level: str) -> None:
    """Apply a level to every logger built by get_logger and to all of its handlers (the --log-level flag)."""
    level = LOG_LEVELS.get(log_level.upper(), logging.INFO)
    for name, config in _logger_configs.items():
        config['log_level'] = log_level.upper()
        logger = logging.getLogger(name)
        logger.setLevel(level)
        for handler in logger.handlers:
            handler.setLevel(level)
