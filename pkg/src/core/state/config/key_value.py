from typing import Any, Iterable

from src.core.state.config.abc import AbstractConfig, normalize_key
from src.core.state.exceptions import ConfigSourceError

COMMENT_PREFIX = "#"
SEPARATOR = "="


def parse_key_values(lines: Iterable[str], source: str, normalize_keys: bool = True) -> dict[str, str]:
    """
    Parses `key = value` lines; blank lines and `#` comments are skipped and key order is kept.

    :param lines: `Iterable[str]`
        Text lines

    :param source: `str`
        Name of the input used in error messages

    :param normalize_keys: `bool`
        Convert keys to UPPER_SNAKE_CASE

    :raises:
        :raise ConfigSourceError: On a non-blank line without a separator or with an empty key
    """

    data: dict[str, str] = {}

    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()

        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue

        key, separator, value = stripped.partition(SEPARATOR)

        if not separator or not key.strip():
            raise ConfigSourceError(source, f"line {line_number}: expected 'key = value'")

        key = normalize_key(key) if normalize_keys else key.strip()
        data[key] = value.strip()

    return data


class KeyValueFileConfig(AbstractConfig):
    """
    Flat `key = value` text configuration.

    Values are kept as stripped strings; typed validation is left to the consumer (pydantic models).
    """

    def __init__(self, path: str, encoding: str = "utf-8", normalize_keys: bool = True) -> None:
        """
        :param path: `str`
            Path to the key-value file

        :param encoding: `str`
            File encoding

        :param normalize_keys: `bool`
            Convert keys to UPPER_SNAKE_CASE. Schema files keep their keys verbatim.
        """

        self._file_path = path
        self._encoding = encoding
        self._normalize_keys = normalize_keys

    def load(self) -> dict[str, Any]:
        with open(self._file_path, "r", encoding=self._encoding) as file:
            return parse_key_values(file, self._file_path, normalize_keys=self._normalize_keys)
