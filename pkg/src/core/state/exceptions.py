from src.core.exceptions import ConfigurationError


class ConfigSourceError(ConfigurationError):
    """
    Raised when a configuration source cannot be read or contains a malformed line.
    """

    def __init__(self, source: str, message: str) -> None:
        super().__init__(f"{source}: {message}")
        self.source = source
