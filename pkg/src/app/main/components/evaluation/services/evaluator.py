import logging
from typing import Sequence

from src.app.main.components.evaluation.entities import EvaluationSummary
from src.core.utils.types import IntArray
from .metrics import evaluate_predictions, majority_baseline

_logger = logging.getLogger(__name__)


def summarize(
        y_true: IntArray,
        y_pred: IntArray,
        train_labels: IntArray,
        class_names: Sequence[str],
        mode: str
) -> EvaluationSummary:
    """
    Model report and majority-class baseline over the same evaluated edges.

    :raises:
        :raise EmptyEvaluationError: If there is nothing to evaluate or no training label for the baseline
    """

    matrix, report = evaluate_predictions(y_true, y_pred, class_names)
    baseline_class, baseline = majority_baseline(train_labels, y_true, class_names)

    _logger.info(
        f"Weighted F1 {report.weighted_f1:.4f} on {matrix.total} edges "
        f"(majority-class baseline {baseline.weighted_f1:.4f})"
    )

    return EvaluationSummary(
        mode=mode,
        num_edges=matrix.total,
        confusion=matrix,
        report=report,
        baseline_class=baseline_class,
        baseline=baseline
    )
