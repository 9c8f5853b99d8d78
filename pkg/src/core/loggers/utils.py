import inspect
import logging
import os
import time
from functools import wraps
from typing import Any

LOG_LEVELS: dict[str, int] = {
    "error": logging.ERROR,
    "info": logging.INFO,
    "debug": logging.DEBUG
}


def level_from_env(variable: str, default: str = "info") -> tuple[int, str | None]:
    """
    Reads a console log level name from an environment variable.

    :param variable: `str`
        Environment variable name (e.g. `EDGMAT_LOG`)

    :param default: `str`
        Level name used when the variable is unset or unknown

    :return: `tuple[int, str | None]`
        The level and, when the variable held an unknown value, that raw value (so the caller can warn)
    """

    raw = os.environ.get(variable)

    if raw is None or not raw.strip():
        return LOG_LEVELS[default], None

    level = LOG_LEVELS.get(raw.strip().lower())

    if level is None:
        return LOG_LEVELS[default], raw

    return level, None


def log_calls(
        logger_name: str | None = None,
        log_result: bool = False,
        log_level: int = logging.DEBUG
):
    """
    A class decorator logging every public method call with its wall time.

    :param logger_name: `str | None`
        The custom name of the logger, where the logs will be pushed. If not given,
        a logger named after the class module and name is used.

    :param log_result: `bool`
        A flag to determine whether the results should be logged or not.
        By default, False.

    :param log_level: `int`
        The logging level.
        By default, logging.DEBUG.

    :return: `cls`
        The original class with wrapped methods.
    """

    def decorator(cls):
        logger = logging.getLogger(logger_name if logger_name is not None else f"{cls.__module__}.{cls.__name__}")

        def get_wrapper(func):
            @wraps(func)
            def wrapper(*args, **kwargs) -> Any:
                started = time.perf_counter()
                result = func(*args, **kwargs)
                elapsed = time.perf_counter() - started

                logger.log(log_level, f"{cls.__name__}.{func.__name__} finished in {elapsed:.3f}s")

                if log_result:
                    logger.log(log_level, f"{cls.__name__}.{func.__name__} returned {result!r}")

                return result

            return wrapper

        for attr, value in list(vars(cls).items()):
            if attr.startswith("_") or not inspect.isfunction(value):
                continue

            setattr(cls, attr, get_wrapper(value))

        return cls

    return decorator
