from src.core.exceptions import BaseApplicationError


class IngestError(BaseApplicationError):
    pass
