from src.core.exceptions import BaseApplicationError


class GraphError(BaseApplicationError):
    pass
