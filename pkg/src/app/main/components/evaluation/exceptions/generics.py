from src.core.exceptions import IllegalArgumentError
from .base import EvaluationError


class ClassIdError(EvaluationError, IllegalArgumentError):
    def __init__(self, value: int, num_classes: int) -> None:
        super().__init__(f"class id {value} out of range [0, {num_classes})")
        self.value = value


class EmptyEvaluationError(EvaluationError):
    pass


class ProjectionError(EvaluationError):
    pass
