from .metrics import (
    confusion,
    per_class_metrics,
    weighted_report,
    evaluate_predictions,
    majority_class,
    majority_baseline
)
from .projection import pca2, power_iteration
from .evaluator import summarize
