import logging

from colorama import Fore, Style


class CustomLogFormatter(logging.Formatter):
    """
    Base formatter: renders records with the class-level `format_` string.

    Static attributes:
    - `format_`: `str`
        The log format string.
    """

    format_ = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"
    datefmt_ = "%Y-%m-%d %H:%M:%S"

    def format(self, record: logging.LogRecord) -> str:
        formatter = logging.Formatter(fmt=self.format_, datefmt=self.datefmt_)
        return formatter.format(record)


class ColoredLogFormatter(CustomLogFormatter):
    """
    Colour-codes records by level using colorama escape sequences.
    Colours are skipped when `use_colors` is False (e.g. output redirected to a file).
    """

    LEVEL_COLORS = {
        logging.DEBUG: Style.DIM,
        logging.INFO: "",
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.RED + Style.BRIGHT
    }

    def __init__(self, *args, use_colors: bool = True, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.use_colors = use_colors

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)

        if not self.use_colors:
            return text

        return self.LEVEL_COLORS.get(record.levelno, "") + text + Style.RESET_ALL


class ConsoleLogFormatter(ColoredLogFormatter):
    """
    Short console format.
    """

    format_ = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class FileLogFormatter(CustomLogFormatter):
    """
    Detailed file format including the call site.
    """

    format_ = "%(asctime)s - %(name)s - %(levelname)s - %(message)s (%(filename)s; in '%(funcName)s':%(lineno)d)"
