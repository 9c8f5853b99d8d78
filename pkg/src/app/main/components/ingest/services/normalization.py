from typing import Iterable, Sequence

import numpy as np

from src.app.main.components.ingest.entities import FlowRecord, NormStats
from src.app.main.components.ingest.exceptions import EmptyInputError, FeatureLayoutError
from src.core.utils.types import FloatArray


def feature_matrix(records: Sequence[FlowRecord]) -> FloatArray:
    if not records:
        return np.zeros((0, 0))

    width = len(records[0].features)

    if any(len(record.features) != width for record in records):
        raise FeatureLayoutError("records do not share one feature dimension")

    return np.array([record.features for record in records], dtype=np.float64).reshape(len(records), width)


def normalize_fit(records: Sequence[FlowRecord], numeric_positions: Iterable[int]) -> NormStats:
    """
    Per-position mean and population standard deviation over `records`.
    Constant positions get a standard deviation of exactly 0.

    :raises:
        :raise EmptyInputError: If `records` is empty
        :raise FeatureLayoutError: If a position is outside the feature vector
    """

    if not records:
        raise EmptyInputError("normalize_fit needs at least one record")

    positions = tuple(numeric_positions)
    matrix = feature_matrix(records)

    if positions and (min(positions) < 0 or max(positions) >= matrix.shape[1]):
        raise FeatureLayoutError(f"numeric positions {positions} exceed feature dimension {matrix.shape[1]}")

    columns = matrix[:, positions]
    mean = columns.mean(axis=0)
    std = columns.std(axis=0)
    std[columns.max(axis=0) == columns.min(axis=0)] = 0.0

    return NormStats(positions=positions, mean=tuple(mean.tolist()), std=tuple(std.tolist()))


def normalize_apply(records: Sequence[FlowRecord], stats: NormStats) -> list[FlowRecord]:
    """
    z-scores the numeric positions named by `stats`; zero-variance positions become 0
    and every other position (one-hot blocks) is copied unchanged.
    """

    if not records:
        return []

    matrix = feature_matrix(records)
    positions = list(stats.positions)

    if positions and max(positions) >= matrix.shape[1]:
        raise FeatureLayoutError(f"statistics cover position {max(positions)} but records have {matrix.shape[1]} features")

    mean = np.asarray(stats.mean)
    std = np.asarray(stats.std)
    scale = np.where(std > 0, std, 1.0)

    columns = (matrix[:, positions] - mean) / scale
    columns[:, std == 0] = 0.0
    matrix[:, positions] = columns

    return [
        record.model_copy(update={"features": tuple(row.tolist())})
        for record, row in zip(records, matrix)
    ]
