import json
from typing import Any

from src.core.state.config.abc import AbstractConfig, normalize_key
from src.core.state.exceptions import ConfigSourceError


class JsonFileConfig(AbstractConfig):
    """
    Run configuration stored as a flat JSON object.
    Note: File will not be modified when settings are updated
    """

    def __init__(self, path: str, encoding: str = "utf-8") -> None:
        """
        :param path: `str`
            The path to the JSON file.

        :param encoding: `str`
            File encoding
        """

        self._file_path = path
        self._encoding = encoding

    def load(self) -> dict[str, Any]:
        """
        Loads the JSON object and normalizes its top-level keys.

        :return: `dict[str, Any]`
            A dictionary containing configuration data.

        :raises:
            :raise ConfigSourceError: If the top-level value is not an object or the JSON is malformed
        """

        with open(self._file_path, "r", encoding=self._encoding) as file:
            try:
                raw = json.load(file)
            except json.JSONDecodeError as error:
                raise ConfigSourceError(self._file_path, f"malformed JSON ({error})") from error

        if not isinstance(raw, dict):
            raise ConfigSourceError(self._file_path, "top-level JSON value must be an object")

        return {normalize_key(key): value for key, value in raw.items()}
