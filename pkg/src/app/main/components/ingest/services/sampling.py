import logging
import math
from collections import defaultdict
from typing import Sequence

from src.app.bases.autograd import rng_stream
from src.app.main.components.ingest.entities import FlowRecord, SplitSpec
from src.core.exceptions import IllegalArgumentError

_logger = logging.getLogger(__name__)


def round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def class_quota(fraction: float, count: int) -> int:
    """
    Number of records of a class kept at `fraction`: round-half-up, at least 1 for a non-empty class.
    """

    if count == 0:
        return 0

    return min(count, max(1, round_half_up(fraction * count)))


def group_by_label(records: Sequence[FlowRecord]) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = defaultdict(list)

    for position, record in enumerate(records):
        groups[record.label].append(position)

    return dict(sorted(groups.items()))


def class_histogram(records: Sequence[FlowRecord]) -> dict[int, int]:
    return {label: len(positions) for label, positions in group_by_label(records).items()}


def stratified_sample(records: Sequence[FlowRecord], fraction: float, seed: int) -> list[FlowRecord]:
    """
    Keeps `class_quota(fraction, n_c)` randomly chosen records of every class; the result keeps input order.

    :raises:
        :raise IllegalArgumentError: If `fraction` is not in (0, 1]
    """

    if not 0 < fraction <= 1:
        raise IllegalArgumentError(f"sample fraction must be in (0, 1], got {fraction}")

    if fraction == 1:
        return list(records)

    rng = rng_stream(seed, "stratified_sample")
    chosen: list[int] = []

    for label, positions in group_by_label(records).items():
        quota = class_quota(fraction, len(positions))
        chosen.extend(positions[index] for index in rng.permutation(len(positions))[:quota])

    _logger.debug(f"Stratified sample kept {len(chosen)} of {len(records)} flows")
    return [records[position] for position in sorted(chosen)]


def stratified_split(records: Sequence[FlowRecord], split: SplitSpec) -> tuple[list[FlowRecord], list[FlowRecord]]:
    """
    Per-class split at `split.train_fraction`. Each class with at least two records keeps at
    least one record on both sides; a single-record class goes to train with a warning.
    Both parts keep input order.
    """

    rng = rng_stream(split.seed, "stratified_split")
    train_positions: list[int] = []

    for label, positions in group_by_label(records).items():
        if len(positions) == 1:
            _logger.warning(f"Class {label} has a single record (row {records[positions[0]].row_index}); assigned to train")
            train_positions.extend(positions)
            continue

        quota = min(class_quota(split.train_fraction, len(positions)), len(positions) - 1)
        train_positions.extend(positions[index] for index in rng.permutation(len(positions))[:quota])

    in_train = set(train_positions)
    train = [record for position, record in enumerate(records) if position in in_train]
    test = [record for position, record in enumerate(records) if position not in in_train]

    return train, test
