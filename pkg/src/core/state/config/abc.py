import re
from abc import ABC, abstractmethod
from typing import Any

_KEY_SEPARATORS = re.compile(r"[\s\-.]+")


def normalize_key(key: str) -> str:
    """
    Normalizes a configuration key to the UPPER_SNAKE_CASE form used by `ProjectSettings`.

    `sample-fraction`, `sample_fraction` and `SAMPLE_FRACTION` all map to `SAMPLE_FRACTION`.

    :param key: `str`
        Raw key as written in a file or on the command line.

    :return: `str`
        Normalized key.
    """

    return _KEY_SEPARATORS.sub("_", key.strip()).upper()


class AbstractConfig(ABC):
    """
    Abstract base class for configuration sources.
    """

    @abstractmethod
    def load(self) -> dict[str, Any]:
        """
        Loads and returns configuration data.

        :return: `dict[str, Any]`
            A dictionary containing configuration data.
        """
