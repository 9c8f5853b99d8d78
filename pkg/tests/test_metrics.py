import numpy as np
import pytest
from sklearn.metrics import precision_recall_fscore_support

from src.app.main.components.evaluation.entities import ClassMetrics, ConfusionMatrix
from src.app.main.components.evaluation.exceptions import ClassIdError, EmptyEvaluationError
from src.app.main.components.evaluation.services import (
    confusion,
    evaluate_predictions,
    majority_baseline,
    majority_class,
    per_class_metrics,
    summarize,
    weighted_report
)
from src.core.exceptions import IllegalArgumentError


def _brute_force(y_true, y_pred, num_classes):
    rows = []

    for label in range(num_classes):
        tp = sum(1 for t, p in zip(y_true, y_pred) if t == label and p == label)
        predicted = sum(1 for p in y_pred if p == label)
        actual = sum(1 for t in y_true if t == label)
        precision = tp / predicted if predicted else 0.0
        recall = tp / actual if actual else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        rows.append((precision, recall, f1, actual))

    return rows


class PTestConfusion:
    def test_identity(self):
        assert confusion([0, 1, 2], [0, 1, 2], 3).counts == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_hand_tally(self):
        matrix = confusion([0, 0, 1, 1], [0, 1, 1, 1], 2)

        assert matrix.counts == ((1, 1), (0, 2))
        assert matrix.supports == (2, 2)
        assert matrix.predicted_counts == (1, 3)
        assert matrix.total == 4

    def test_empty(self):
        assert confusion([], [], 3).counts == ((0, 0, 0),) * 3

    def test_id_out_of_range(self):
        with pytest.raises(ClassIdError):
            confusion([0, 3], [0, 1], 3)

    def test_length_mismatch(self):
        with pytest.raises(IllegalArgumentError):
            confusion([0, 1], [0], 2)

    def test_matrix_must_be_square(self):
        with pytest.raises(ValueError):
            ConfusionMatrix(counts=((1, 0), (0,)))


class PTestPerClassMetrics:
    def test_hand_values(self):
        first, second = per_class_metrics(ConfusionMatrix(counts=((1, 1), (0, 2))))

        assert (first.precision, first.recall) == (1.0, 0.5)
        assert first.f1 == pytest.approx(2 / 3, abs=1e-12)
        assert second.precision == pytest.approx(2 / 3, abs=1e-12)
        assert second.recall == 1.0
        assert second.f1 == pytest.approx(0.8, abs=1e-12)

    def test_absent_class_scores_zero(self):
        metrics = per_class_metrics(confusion([0, 1, 1], [0, 1, 0], 5))
        theft = metrics[4]

        assert (theft.precision, theft.recall, theft.f1, theft.support) == (0.0, 0.0, 0.0, 0)

    def test_perfect_diagonal(self):
        for metric in per_class_metrics(confusion([0, 1, 2, 2], [0, 1, 2, 2], 3)):
            assert (metric.precision, metric.recall, metric.f1) == (1.0, 1.0, 1.0)


class PTestWeightedReport:
    def test_hand_values(self):
        report = weighted_report(per_class_metrics(ConfusionMatrix(counts=((1, 1), (0, 2)))))

        assert report.weighted_f1 == pytest.approx(0.5 * (2 / 3) + 0.5 * 0.8, abs=1e-12)
        assert report.class_names == ("class0", "class1")
        assert report.total_support == 4

    def test_single_class(self):
        metric = ClassMetrics(precision=0.3, recall=0.6, f1=0.4, support=7)
        report = weighted_report([metric])

        assert (report.weighted_precision, report.weighted_recall, report.weighted_f1) == (0.3, 0.6, 0.4)

    def test_zero_support_has_no_weight(self):
        metrics = [ClassMetrics(precision=0.5, recall=0.5, f1=0.5, support=4), ClassMetrics(precision=1, recall=1, f1=1, support=0)]
        assert weighted_report(metrics).weighted_f1 == 0.5

    def test_zero_total(self):
        with pytest.raises(EmptyEvaluationError):
            weighted_report(per_class_metrics(confusion([], [], 2)))

    @pytest.mark.parametrize("seed", range(100))
    def test_matches_oracles(self, seed):
        rng = np.random.default_rng(seed)
        num_classes = int(rng.integers(1, 7))
        size = int(rng.integers(1, 51))
        y_true = rng.integers(0, num_classes, size=size)
        y_pred = np.where(rng.random(size) < 0.6, y_true, rng.integers(0, num_classes, size=size))
        names = [f"c{index}" for index in range(num_classes)]

        matrix, report = evaluate_predictions(y_true, y_pred, names)
        expected = _brute_force(y_true.tolist(), y_pred.tolist(), num_classes)

        for metric, (precision, recall, f1, support) in zip(report.classes, expected):
            assert metric.precision == pytest.approx(precision, abs=1e-12)
            assert metric.recall == pytest.approx(recall, abs=1e-12)
            assert metric.f1 == pytest.approx(f1, abs=1e-12)
            assert metric.support == support

        labels = list(range(num_classes))
        sk_precision, sk_recall, sk_f1, _ = precision_recall_fscore_support(
            y_true, y_pred, labels=labels, average="weighted", zero_division=0
        )
        assert report.weighted_precision == pytest.approx(sk_precision, abs=1e-12)
        assert report.weighted_recall == pytest.approx(sk_recall, abs=1e-12)
        assert report.weighted_f1 == pytest.approx(sk_f1, abs=1e-12)

        assert report.weighted_recall == pytest.approx(float((y_true == y_pred).mean()), abs=1e-12)
        assert matrix.total == size

    def test_order_invariant(self):
        rng = np.random.default_rng(1)
        y_true, y_pred = rng.integers(0, 4, size=40), rng.integers(0, 4, size=40)
        order = rng.permutation(40)
        names = ["a", "b", "c", "d"]

        assert evaluate_predictions(y_true, y_pred, names) == evaluate_predictions(y_true[order], y_pred[order], names)


class PTestBaseline:
    def test_majority_class_tie(self):
        assert majority_class([2, 1, 2, 1, 0], 3) == 1

    def test_majority_of_empty(self):
        with pytest.raises(EmptyEvaluationError):
            majority_class([], 2)

    def test_baseline_report(self):
        majority, report = majority_baseline([0, 0, 0, 1], [0, 1, 1, 0], ["Benign", "Attack"])

        assert majority == 0
        assert report.classes[0].recall == 1.0
        assert report.classes[1].f1 == 0.0
        assert report.weighted_recall == 0.5

    def test_summary(self):
        summary = summarize(np.array([0, 1, 1]), np.array([0, 1, 0]), np.array([1, 1, 0]), ["Benign", "Attack"], "inductive")

        assert summary.num_edges == 3
        assert summary.baseline_class == 1
        assert summary.report.weighted_recall == pytest.approx(2 / 3)
        assert summary.mode == "inductive"
