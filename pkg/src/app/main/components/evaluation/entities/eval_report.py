from pydantic import Field

from src.app.bases.schemas import BaseSchema
from .confusion_matrix import ConfusionMatrix


class ClassMetrics(BaseSchema):
    precision: float = Field(ge=0, le=1)
    recall: float = Field(ge=0, le=1)
    f1: float = Field(ge=0, le=1)
    support: int = Field(ge=0)


class EvalReport(BaseSchema):
    """
    Per-class metrics plus their support-weighted averages
    (weight of class c = support_c / total support).
    """

    class_names: tuple[str, ...]
    classes: tuple[ClassMetrics, ...]
    weighted_precision: float = Field(ge=0, le=1)
    weighted_recall: float = Field(ge=0, le=1)
    weighted_f1: float = Field(ge=0, le=1)

    @property
    def total_support(self) -> int:
        return sum(metrics.support for metrics in self.classes)


class EvaluationSummary(BaseSchema):
    """
    Everything `evaluate` persists: the model report, its confusion matrix and the
    majority-class baseline on the same edges.
    """

    mode: str
    num_edges: int
    confusion: ConfusionMatrix
    report: EvalReport
    baseline_class: int
    baseline: EvalReport
