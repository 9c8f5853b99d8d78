from typing import Any

import pandas as pd

from src.app.main.components.evaluation.entities import EvalReport, EvaluationSummary
from src.core.utils.collections import format_key_values

WEIGHTED_ROW = "Weighted Average"


class ReportRepository:
    """
    Writes an evaluation twice: `report.txt`, a table with one row per class and a
    "Weighted Average" row (precision and recall in percent, F1 as a fraction), and
    `report.kv`, the same numbers unrounded as `key = value` lines.
    """

    def __init__(self, encoding: str = "utf-8") -> None:
        self._encoding = encoding

    @staticmethod
    def table(report: EvalReport) -> pd.DataFrame:
        rows = [
            (name, metrics.precision * 100, metrics.recall * 100, metrics.f1, metrics.support)
            for name, metrics in zip(report.class_names, report.classes)
        ]
        rows.append((
            WEIGHTED_ROW,
            report.weighted_precision * 100,
            report.weighted_recall * 100,
            report.weighted_f1,
            report.total_support
        ))

        return pd.DataFrame(rows, columns=["Class", "Precision (%)", "Recall (%)", "F1-Score", "Support"])

    def render_table(self, summary: EvaluationSummary) -> str:
        table = self.table(summary.report).to_string(
            index=False,
            formatters={
                "Precision (%)": "{:.2f}%".format,
                "Recall (%)": "{:.2f}%".format,
                "F1-Score": "{:.4f}".format
            }
        )
        baseline = summary.baseline
        baseline_name = summary.report.class_names[summary.baseline_class]

        return (
            f"Multi-class classification results ({summary.mode}, {summary.num_edges} test edges)\n\n"
            f"{table}\n\n"
            f"Majority-class baseline ({baseline_name}): "
            f"precision {baseline.weighted_precision * 100:.2f}%, "
            f"recall {baseline.weighted_recall * 100:.2f}%, "
            f"F1 {baseline.weighted_f1:.4f}\n"
        )

    @staticmethod
    def _report_values(report: EvalReport, prefix: str) -> dict[str, Any]:
        values: dict[str, Any] = {}

        for name, metrics in zip(report.class_names, report.classes):
            values[f"{prefix}class.{name}.precision"] = metrics.precision
            values[f"{prefix}class.{name}.recall"] = metrics.recall
            values[f"{prefix}class.{name}.f1"] = metrics.f1
            values[f"{prefix}class.{name}.support"] = metrics.support

        values[f"{prefix}weighted.precision"] = report.weighted_precision
        values[f"{prefix}weighted.recall"] = report.weighted_recall
        values[f"{prefix}weighted.f1"] = report.weighted_f1
        return values

    def render_key_values(self, summary: EvaluationSummary) -> str:
        values: dict[str, Any] = {
            "mode": summary.mode,
            "num_edges": summary.num_edges,
            "classes": list(summary.report.class_names)
        }
        values.update(self._report_values(summary.report, ""))

        for name, row in zip(summary.report.class_names, summary.confusion.counts):
            values[f"confusion.{name}"] = list(row)

        values["baseline.class"] = summary.report.class_names[summary.baseline_class]
        values.update(self._report_values(summary.baseline, "baseline."))
        return format_key_values(values)

    def save(self, summary: EvaluationSummary, table_path: str, key_values_path: str) -> None:
        with open(table_path, "w", encoding=self._encoding) as file:
            file.write(self.render_table(summary))

        with open(key_values_path, "w", encoding=self._encoding) as file:
            file.write(self.render_key_values(summary))
