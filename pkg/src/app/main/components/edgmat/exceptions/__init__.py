from .base import ModelError
from .generics import (
    DimensionMismatchError,
    NoTrainingEdgesError,
    CheckpointError,
    CheckpointFormatError,
    CheckpointVersionError,
    CheckpointShapeError,
    CheckpointTruncatedError
)
