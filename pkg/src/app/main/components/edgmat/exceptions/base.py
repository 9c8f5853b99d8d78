from src.core.exceptions import BaseApplicationError


class ModelError(BaseApplicationError):
    pass
