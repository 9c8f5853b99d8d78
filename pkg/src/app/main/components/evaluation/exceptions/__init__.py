from .base import EvaluationError
from .generics import ClassIdError, EmptyEvaluationError, ProjectionError
