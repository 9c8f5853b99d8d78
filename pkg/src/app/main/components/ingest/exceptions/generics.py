from src.core.exceptions import IllegalArgumentError
from .base import IngestError


class SchemaError(IngestError):
    def __init__(self, message: str, column: str | None = None) -> None:
        super().__init__(f"column '{column}': {message}" if column is not None else message)
        self.column = column


class RowParseError(IngestError):
    def __init__(self, row: int, column: str, value: str, reason: str = "not a finite number") -> None:
        super().__init__(f"row {row}, column '{column}': {value!r} is {reason}")
        self.row = row
        self.column = column
        self.value = value


class LabelError(IngestError):
    def __init__(self, row: int, value: str, known: tuple[str, ...]) -> None:
        super().__init__(f"row {row}: unknown label {value!r} (known: {', '.join(known)})")
        self.row = row
        self.value = value


class EmptyInputError(IngestError, IllegalArgumentError):
    pass


class FeatureLayoutError(IngestError):
    pass
