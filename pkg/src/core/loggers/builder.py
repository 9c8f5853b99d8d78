import logging
import os
import sys
from typing import TextIO

from typing_extensions import Self

from colorama import just_fix_windows_console

from .formatters import ConsoleLogFormatter, FileLogFormatter


class LoggerBuilder:
    """
    A builder class for creating and configuring loggers.

    Static attributes:
    - `DEFAULT_FILE_LOG_FORMATTER`: `logging.Formatter`
        The default log formatter for files (`FileLogFormatter` by default).
    """

    DEFAULT_FILE_LOG_FORMATTER: logging.Formatter = FileLogFormatter()

    def __init__(self, name: str, level: int = logging.INFO) -> None:
        """
        Creates (or reuses) the logger with specified name and level.
        Handlers previously attached by another builder are removed, so building twice
        in one process (tests, repeated commands) does not duplicate output.

        :param name: `str`
            Logger name

        :param level: `int`
            (Optional) Log level for logger.
            By default, `logging.INFO`
        """

        self._logger: logging.Logger = logging.getLogger(name)
        self._logger.setLevel(level)

        for handler in list(self._logger.handlers):
            self._logger.removeHandler(handler)
            handler.close()

    def enable_console(
            self,
            level: int = logging.INFO,
            formatter: logging.Formatter | None = None,
            stream: TextIO | None = None
    ) -> Self:
        """
        Adds a `logging.StreamHandler`. Logs go to `sys.stderr` by default so that
        command output on stdout stays machine-readable.

        :param level: `int`
            (Optional) Log level for StreamHandler.
            By default, `logging.INFO`

        :param formatter: `logging.Formatter | None`
            (Optional) Formatter for StreamHandler. By default, a `ConsoleLogFormatter`
            with colours enabled only when the stream is a terminal.

        :param stream: `TextIO | None`
            (Optional) Target stream

        :return: `Self`
            LoggerBuilder object (self)
        """

        stream = stream or sys.stderr
        just_fix_windows_console()

        console_handler = logging.StreamHandler(stream=stream)
        console_handler.setFormatter(formatter or ConsoleLogFormatter(use_colors=stream.isatty()))
        console_handler.setLevel(level)

        self._logger.addHandler(console_handler)
        return self

    def add_file(self,
                 path: str,
                 level: int = logging.DEBUG,
                 formatter: logging.Formatter | None = None,
                 encoding: str | None = None) -> Self:
        """
        Adds `logging.FileHandler` to logger, for logs to be saved to the specified file

        :param path: `str`
            Path to log file

        :param level: `int`
            (Optional) Log level for FileHandler

        :param formatter: `logging.Formatter | None`
            (Optional) Formatter for handler

        :param encoding: `str | None`
            (Optional) Encoding of the log file

        :return: `Self`
            LoggerBuilder object (self)
        """

        directory = os.path.dirname(path)

        if directory:
            os.makedirs(directory, exist_ok=True)

        file_handler = logging.FileHandler(filename=path, encoding=encoding or "utf-8")
        file_handler.setFormatter(formatter or self.DEFAULT_FILE_LOG_FORMATTER)
        file_handler.setLevel(level)

        self._logger.addHandler(file_handler)
        return self

    def get(self) -> logging.Logger:
        """
        Returns created logger (`logging.Logger`) object
        """

        return self._logger
