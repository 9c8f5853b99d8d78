from .builder import LoggerBuilder
from .formatters import (
    CustomLogFormatter,
    ColoredLogFormatter,
    ConsoleLogFormatter,
    FileLogFormatter
)
from .utils import LOG_LEVELS, level_from_env, log_calls
