from typing_extensions import Self

import numpy as np
from pydantic import model_validator

from src.app.bases.schemas import BaseSchema
from src.core.utils.types import IntArray


class ConfusionMatrix(BaseSchema):
    """
    C x C tallies; rows are true classes, columns predicted classes.
    """

    counts: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_square(self) -> Self:
        size = len(self.counts)

        if any(len(row) != size for row in self.counts):
            raise ValueError("confusion matrix must be square")

        if any(value < 0 for row in self.counts for value in row):
            raise ValueError("confusion matrix entries must be non-negative")

        return self

    @property
    def num_classes(self) -> int:
        return len(self.counts)

    @property
    def array(self) -> IntArray:
        return np.array(self.counts, dtype=np.int64).reshape(self.num_classes, self.num_classes)

    @property
    def supports(self) -> tuple[int, ...]:
        return tuple(int(value) for value in self.array.sum(axis=1))

    @property
    def predicted_counts(self) -> tuple[int, ...]:
        return tuple(int(value) for value in self.array.sum(axis=0))

    @property
    def total(self) -> int:
        return int(self.array.sum())
