from typing import Sequence

import numpy as np
from sklearn.metrics import confusion_matrix

from src.app.main.components.evaluation.entities import ClassMetrics, ConfusionMatrix, EvalReport
from src.app.main.components.evaluation.exceptions import ClassIdError, EmptyEvaluationError
from src.core.exceptions import IllegalArgumentError
from src.core.utils.types import FloatArray, IntArray


def _as_ids(values: Sequence[int] | IntArray) -> IntArray:
    return np.asarray(values, dtype=np.int64).reshape(-1)


def _ratio(numerator: FloatArray, denominator: FloatArray) -> FloatArray:
    """
    Element-wise division with 0/0 (and x/0) mapped to 0.
    """

    result = np.zeros_like(numerator, dtype=np.float64)
    np.divide(numerator, denominator, out=result, where=denominator > 0)
    return result


def _unit(value: float) -> float:
    return float(min(1.0, max(0.0, value)))


def confusion(y_true: Sequence[int] | IntArray, y_pred: Sequence[int] | IntArray, num_classes: int) -> ConfusionMatrix:
    """
    :raises:
        :raise IllegalArgumentError: On length mismatch or `num_classes < 1`
        :raise ClassIdError: If an id is outside `[0, num_classes)`
    """

    y_true, y_pred = _as_ids(y_true), _as_ids(y_pred)

    if num_classes < 1:
        raise IllegalArgumentError(f"num_classes must be >= 1, got {num_classes}")

    if y_true.shape != y_pred.shape:
        raise IllegalArgumentError(f"y_true has {y_true.size} entries, y_pred {y_pred.size}")

    for values in (y_true, y_pred):
        out_of_range = values[(values < 0) | (values >= num_classes)]

        if out_of_range.size:
            raise ClassIdError(int(out_of_range[0]), num_classes)

    if not y_true.size:
        counts = np.zeros((num_classes, num_classes), dtype=np.int64)
    else:
        counts = confusion_matrix(y_true, y_pred, labels=np.arange(num_classes))

    return ConfusionMatrix(counts=tuple(tuple(int(value) for value in row) for row in counts))


def per_class_metrics(matrix: ConfusionMatrix) -> tuple[ClassMetrics, ...]:
    """
    precision_c = M[c][c] / column sum, recall_c = M[c][c] / row sum, F1 their harmonic mean.
    Every 0/0 is 0, so a class never true and never predicted scores 0 across the board.
    """

    counts = matrix.array.astype(np.float64)
    hits = np.diag(counts)
    supports = counts.sum(axis=1)

    precision = _ratio(hits, counts.sum(axis=0))
    recall = _ratio(hits, supports)
    f1 = _ratio(2.0 * precision * recall, precision + recall)

    return tuple(
        ClassMetrics(precision=_unit(p), recall=_unit(r), f1=_unit(f), support=int(s))
        for p, r, f, s in zip(precision, recall, f1, supports)
    )


def weighted_report(
        metrics: Sequence[ClassMetrics],
        supports: Sequence[int] | None = None,
        class_names: Sequence[str] | None = None
) -> EvalReport:
    """
    Support-weighted averages: weighted metric = sum_c (support_c / total) * metric_c.

    :param metrics: `Sequence[ClassMetrics]`
        Per-class metrics

    :param supports: `Sequence[int] | None`
        Weights; defaults to the supports carried by `metrics`

    :param class_names: `Sequence[str] | None`
        Names for the report; defaults to `class0`, `class1`, ...

    :raises:
        :raise EmptyEvaluationError: If the total support is 0
    """

    supports = np.asarray(
        [metric.support for metric in metrics] if supports is None else list(supports), dtype=np.float64
    )

    if supports.shape != (len(metrics),):
        raise IllegalArgumentError(f"{len(metrics)} classes but {supports.size} supports")

    total = supports.sum()

    if total <= 0:
        raise EmptyEvaluationError("weighted metrics need at least one evaluated edge")

    weights = supports / total
    names = tuple(class_names) if class_names is not None else tuple(f"class{index}" for index in range(len(metrics)))

    if len(names) != len(metrics):
        raise IllegalArgumentError(f"{len(metrics)} classes but {len(names)} class names")

    def weighted(field: str) -> float:
        return _unit(float(np.dot(weights, [getattr(metric, field) for metric in metrics])))

    return EvalReport(
        class_names=names,
        classes=tuple(metric.model_copy(update={"support": int(support)}) for metric, support in zip(metrics, supports)),
        weighted_precision=weighted("precision"),
        weighted_recall=weighted("recall"),
        weighted_f1=weighted("f1")
    )


def evaluate_predictions(
        y_true: Sequence[int] | IntArray,
        y_pred: Sequence[int] | IntArray,
        class_names: Sequence[str]
) -> tuple[ConfusionMatrix, EvalReport]:
    matrix = confusion(y_true, y_pred, len(class_names))
    return matrix, weighted_report(per_class_metrics(matrix), class_names=class_names)


def majority_class(labels: Sequence[int] | IntArray, num_classes: int) -> int:
    """
    Most frequent class id in `labels`; the lowest id wins ties.
    """

    labels = _as_ids(labels)

    if not labels.size:
        raise EmptyEvaluationError("majority class of an empty label set")

    return int(np.argmax(np.bincount(labels, minlength=num_classes)))


def majority_baseline(
        train_labels: Sequence[int] | IntArray,
        y_true: Sequence[int] | IntArray,
        class_names: Sequence[str]
) -> tuple[int, EvalReport]:
    """
    Report of the predictor that always answers the most frequent training class.
    """

    majority = majority_class(train_labels, len(class_names))
    y_true = _as_ids(y_true)
    _, report = evaluate_predictions(y_true, np.full(y_true.shape, majority), class_names)
    return majority, report
