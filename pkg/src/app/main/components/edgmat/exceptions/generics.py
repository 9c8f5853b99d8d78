from src.core.exceptions import BadVersionError
from .base import ModelError


class DimensionMismatchError(ModelError):
    def __init__(self, what: str, expected: int, actual: int) -> None:
        super().__init__(f"{what}: model expects {expected}, got {actual}")
        self.what = what
        self.expected = expected
        self.actual = actual


class NoTrainingEdgesError(ModelError):
    pass


class CheckpointError(ModelError):
    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"checkpoint {path}: {message}")
        self.path = path


class CheckpointFormatError(CheckpointError):
    pass


class CheckpointVersionError(CheckpointError, BadVersionError):
    pass


class CheckpointShapeError(CheckpointError):
    def __init__(self, path: str, parameter: str, message: str) -> None:
        super().__init__(path, f"parameter '{parameter}': {message}")
        self.parameter = parameter


class CheckpointTruncatedError(CheckpointError):
    pass
