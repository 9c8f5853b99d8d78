import logging

from src import config
from src.core.loggers import LoggerBuilder, level_from_env


def setup_loggers(log_file: str | None = None) -> logging.Logger:
    level, bad_value = level_from_env(config.LOG_ENV_VARIABLE, default=config.DEFAULT_LOG_LEVEL)
    builder = LoggerBuilder('src', logging.DEBUG).enable_console(level=level)

    if log_file is not None:
        builder.add_file(log_file, level=logging.DEBUG, encoding=config.ENCODING)

    logger = builder.get()

    if bad_value is not None:
        logger.warning(f"Unknown {config.LOG_ENV_VARIABLE} value {bad_value!r}, using '{config.DEFAULT_LOG_LEVEL}'")

    return logger
