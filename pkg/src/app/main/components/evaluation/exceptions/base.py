from src.core.exceptions import BaseApplicationError


class EvaluationError(BaseApplicationError):
    pass
