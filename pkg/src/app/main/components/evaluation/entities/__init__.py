from .confusion_matrix import ConfusionMatrix
from .eval_report import ClassMetrics, EvalReport, EvaluationSummary
from .projection import PcaProjection
