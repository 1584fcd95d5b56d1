import os
import re
import sys
import logging

from fractions import Fraction
from typing import Union, List, Type, Optional
from logging import Logger, FileHandler, StreamHandler, Handler

from .constants import ENV_LOG_DIR


def parse_range(text: str) -> range:
    """Parses an inclusive ``a..b`` range, or a single integer

    **Example**::

       >>> parse_range('4..6')
       range(4, 7)

       >>> parse_range('5')
       range(5, 6)
    """
    match = re.fullmatch(r'\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?', text)
    if not match:
        raise ValueError(f'Invalid range "{text}"; expected "a..b" or a single integer')
    start = int(match.group(1))
    stop = int(match.group(2)) if match.group(2) is not None else start
    if stop < start:
        raise ValueError(f'Invalid range "{text}"; the end precedes the start')
    return range(start, stop + 1)


def format_rational(value: Union[Fraction, int]) -> str:
    """Reduced ``p/q`` text for a rational, or plain ``p`` when it is an integer"""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class LoggerUtils:
    """Utility class that simplifies access to logger handler info"""

    @staticmethod
    def get_stream_handlers(logger: Logger) -> List[Handler]:
        """Get all the StreamHandlers of the current logger (NOTE: StreamHandler subclasses excluded)"""
        return [handler for handler in logger.handlers if type(handler) == StreamHandler]

    @staticmethod
    def get_file_handlers(logger: Logger) -> List[FileHandler]:
        """Get all the FileHandlers of the current logger"""
        return [handler for handler in logger.handlers if isinstance(handler, FileHandler)]

    @staticmethod
    def get_log_files(logger: Logger) -> List[str]:
        """Get the log file paths from all FileHandlers of a logger"""
        return [handler.baseFilename for handler in LoggerUtils.get_file_handlers(logger)]

    @staticmethod
    def map_handlers_by_name(logger: Logger):
        """Map the handlers of a logger first by type, and then by their name

        Handlers without a name are skipped
        """
        mapping = {
            'stream': {},
            'file': {}
        }
        for stream_handler in LoggerUtils.get_stream_handlers(logger):
            if stream_handler.name:
                mapping['stream'][stream_handler.name] = stream_handler

        for file_handler in LoggerUtils.get_file_handlers(logger):
            if file_handler.name:
                entry = mapping['file'].setdefault(file_handler.name, {})
                entry['handler'] = file_handler
                entry['file'] = file_handler.baseFilename

        return mapping


class SpectraLogger:
    """Logging class used within the package

    :cvar PREFIX:           hardcoded prefix to use in log messages
    :cvar PACKAGE_LOG_NAME: the default name for the package logger
    :cvar ENGINE_LOG_NAME:  the default name for engine loggers
    :cvar LOG_MESSAGE:      the default format for the message component of log messages
    :cvar FORMATTER:        the default logging format
    :cvar HANDLER_NAME:     the default format for the names of handlers created by this package
    """

    PREFIX = "SymCayley"
    PACKAGE_LOG_NAME = "symcayley"
    ENGINE_LOG_NAME = "symcayley-engine"
    HANDLER_NAME = '{}__{}__{}'.format(PREFIX, '{name}', '{stdout_level}')

    LOG_MESSAGE = "|[ {pfx} | {name} ]|:  {message}".format(
        pfx=PREFIX, name="{name}", message="{message}"
    )

    FORMATTER = logging.Formatter(
        fmt="%(asctime)s %(levelname)-5s  %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )

    def __init__(self, name: str, log_file: Optional[str] = None, stdout_level: Union[int, str] = 'WARNING'):
        """Initialize the logger

        Console output goes to ``stderr`` so that report payloads on ``stdout`` stay untouched.
        A DEBUG file handler is only attached when a ``log_file`` is given or the
        ``SYMCAYLEY_LOG_DIR`` environment variable is set.

        :param name: logger name
        :param log_file: log file name
        :param stdout_level: logging level for the console handler
        """
        self.name = name
        self.logger = None
        self.handler_name = None

        default_log_dir = os.getenv(ENV_LOG_DIR)
        final_log_file = log_file
        if default_log_dir:
            os.makedirs(default_log_dir, exist_ok=True)
            final_log_file = os.path.join(default_log_dir, os.path.basename(log_file or f'{self.name}.log'))

        self.log_file = final_log_file
        self.setup_logger(stdout_level)

    def setup_logger(self, stdout_level: Union[int, str] = 'WARNING') -> bool:
        """Configures a logger and assigns it to the `logger` attribute."""
        logger = logging.getLogger(self.name)
        handler_map = LoggerUtils.map_handlers_by_name(logger)

        self.handler_name = SpectraLogger.HANDLER_NAME.format(
            name=self.name, stdout_level=stdout_level
        )

        if self.handler_name not in handler_map['stream']:
            if len(handler_map['stream']) > 0:
                self.clear_package_handlers(logger, handler_type=StreamHandler)
            stream_handler = StreamHandler(stream=sys.stderr)
            stream_handler.setFormatter(SpectraLogger.FORMATTER)
            stream_handler.name = self.handler_name
            stream_handler.setLevel(stdout_level)
            logger.addHandler(stream_handler)

        if self.log_file and (self.handler_name not in handler_map['file'] or self.log_path not in LoggerUtils.get_log_files(logger)):
            if len(handler_map['file']) > 0:
                self.clear_package_handlers(logger, handler_type=FileHandler)
            f_handler = FileHandler(self.log_file)
            f_handler.setFormatter(SpectraLogger.FORMATTER)
            f_handler.name = self.handler_name
            f_handler.setLevel("DEBUG")
            logger.addHandler(f_handler)

        logger.setLevel(logging.DEBUG)
        logger.propagate = False
        self.logger = logger
        return True

    def set_level(self, stdout_level: Union[int, str]) -> bool:
        """Rebuilds the console handler at a new level"""
        return self.setup_logger(stdout_level)

    def format_msg(self, msg: str) -> str:
        """Formats the :attr:`~.LOG_MESSAGE` using the specified message"""
        return SpectraLogger.LOG_MESSAGE.format(
            name=self.name,
            message=msg
        )

    def debug(self, msg):
        return self.logger.debug(self.format_msg(msg))

    def info(self, msg):
        return self.logger.info(self.format_msg(msg))

    def error(self, msg):
        return self.logger.error(self.format_msg(msg))

    def warning(self, msg):
        return self.logger.warning(self.format_msg(msg))

    def critical(self, msg):
        return self.logger.critical(self.format_msg(msg))

    @property
    def handlers(self):
        return self.logger.handlers

    @property
    def handler_map(self):
        return LoggerUtils.map_handlers_by_name(self.logger)

    @property
    def stream_handlers(self):
        return LoggerUtils.get_stream_handlers(self.logger)

    @property
    def log_files(self):
        return LoggerUtils.get_log_files(self.logger)

    @property
    def log_path(self) -> Optional[str]:
        return os.path.abspath(self.log_file) if self.log_file else None

    @staticmethod
    def get_package_handlers(logger: Logger) -> List[Handler]:
        return [handler for handler in logger.handlers if SpectraLogger.owns_handler(handler)]

    @staticmethod
    def clear_package_handlers(logger: Logger, handler_type: Union[Type[FileHandler], Type[StreamHandler]]) -> None:
        """Clear all handlers of ``handler_type`` from a logger that were created by SpectraLogger"""
        for handler in SpectraLogger.get_package_handlers(logger):
            if type(handler) == handler_type:
                logger.removeHandler(handler)
                if isinstance(handler, FileHandler):
                    handler.close()

    @staticmethod
    def owns_handler(handler: Handler) -> bool:
        """Checks if a handler was created by this package"""
        try:  # Match handler name to SpectraLogger.HANDLER_NAME format
            prefix, name, stdout_level = handler.name.split('__')
            return prefix == SpectraLogger.PREFIX
        except (AttributeError, ValueError):
            return False


def get_package_logger() -> SpectraLogger:
    """Returns the package :class:`SpectraLogger`, creating it on first use"""
    from . import logger
    return logger
