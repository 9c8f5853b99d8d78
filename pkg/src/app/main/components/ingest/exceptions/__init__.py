from .base import IngestError
from .generics import (
    SchemaError,
    RowParseError,
    LabelError,
    EmptyInputError,
    FeatureLayoutError
)
