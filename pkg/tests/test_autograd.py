import math
import warnings

import numpy as np
import pytest

from src.app.bases.autograd import (
    Adam,
    InvalidLabelError,
    Parameter,
    ShapeMismatchError,
    Tape,
    TapeError,
    Tensor,
    adam_step,
    gradcheck,
    ops,
    rng_stream
)
from src.app.bases.autograd.tape import record
from src.core.exceptions import IllegalArgumentError


def _total(x: Tensor) -> Tensor:
    return record("sum", (x,), np.asarray(x.data.sum()), lambda grad: (np.full(x.shape, grad.reshape(-1)[0]),))


def _product(a: Tensor, b: Tensor) -> Tensor:
    return record("product", (a, b), a.data * b.data, lambda grad: (grad * b.data, grad * a.data))


def _away_from_zero(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    values = rng.uniform(0.1, 1.0, size=shape)
    return values * rng.choice([-1.0, 1.0], size=shape)


class PTestMatmul:
    def test_identity(self):
        x = Tensor([[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(ops.matmul(Tensor(np.eye(2)), x).data, x.data)

    def test_hand_product(self):
        result = ops.matmul(Tensor([[1.0, 2.0], [3.0, 4.0]]), Tensor([[1.0], [1.0]]))
        assert result.data.tolist() == [[3.0], [7.0]]

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            ops.matmul(Tensor(np.ones((2, 3))), Tensor(np.ones((2, 3))))

    def test_gradcheck(self):
        rng = np.random.default_rng(0)
        a = Tensor(rng.standard_normal((3, 2)))
        b = Tensor(rng.standard_normal((2, 2)))
        assert gradcheck(lambda: _total(ops.matmul(a, b)), [a, b]) < 1e-5


class PTestConcat:
    def test_singleton(self):
        x = Tensor([[1.0, 2.0]])
        assert ops.concat([x]) is x

    def test_columns(self):
        result = ops.concat([Tensor([[1.0], [2.0]]), Tensor([[3.0], [4.0]])], axis=1)
        assert result.data.tolist() == [[1.0, 3.0], [2.0, 4.0]]

    def test_gradient_of_sum_is_ones(self):
        a, b = Tensor(np.zeros((2, 3)), requires_grad=True), Tensor(np.zeros((2, 1)), requires_grad=True)

        with Tape() as tape:
            loss = _total(ops.concat([a, b], axis=1))

        tape.backward(loss)
        assert np.array_equal(a.grad, np.ones((2, 3)))

    def test_dim_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            ops.concat([Tensor(np.ones((2, 1))), Tensor(np.ones((3, 1)))], axis=1)


class PTestActivations:
    def test_leaky_relu_branches(self):
        result = ops.leaky_relu(Tensor([5.0, -5.0, 0.0]), 0.2)
        assert result.data.tolist() == [5.0, -1.0, 0.0]

    def test_leaky_relu_gradient_at_zero_is_slope(self):
        x = Tensor([0.0], requires_grad=True)

        with Tape() as tape:
            loss = _total(ops.leaky_relu(x, 0.2))

        tape.backward(loss)
        assert x.grad[0] == pytest.approx(0.2)

    def test_negative_slope_rejected(self):
        with pytest.raises(IllegalArgumentError):
            ops.leaky_relu(Tensor([1.0]), -0.1)

    def test_relu(self):
        assert ops.relu(Tensor([[-1.0, 2.0]])).data.tolist() == [[0.0, 2.0]]


class PTestSegmentSoftmax:
    def test_singleton_segment(self):
        assert ops.segment_softmax(Tensor([42.0]), [0], 1).data.tolist() == [1.0]

    def test_equal_scores(self):
        assert ops.segment_softmax(Tensor([3.0, 3.0]), [0, 0], 1).data.tolist() == [0.5, 0.5]

    def test_ln3(self):
        result = ops.segment_softmax(Tensor([0.0, math.log(3.0)]), [0, 0], 1)
        assert np.allclose(result.data, [0.25, 0.75], atol=1e-12)

    def test_sums_and_shift_invariance(self):
        rng = np.random.default_rng(1)
        scores = rng.standard_normal(12) * 10
        segments = rng.integers(0, 4, size=12)
        alpha = ops.segment_softmax(Tensor(scores), segments, 5).data

        for segment in np.unique(segments):
            assert alpha[segments == segment].sum() == pytest.approx(1.0, abs=1e-12)

        shifted = scores + np.where(segments == segments[0], 100.0, 0.0)
        assert np.allclose(ops.segment_softmax(Tensor(shifted), segments, 5).data, alpha, atol=1e-12)

    def test_large_scores_stay_finite(self):
        result = ops.segment_softmax(Tensor([1000.0, 999.0]), [0, 0], 1)
        assert np.isfinite(result.data).all()

    def test_gradcheck(self):
        rng = np.random.default_rng(2)
        scores = Tensor(rng.standard_normal(7))
        segments = np.array([0, 0, 1, 1, 1, 3, 3])
        weights = rng.standard_normal(7)
        assert gradcheck(lambda: _total(_product(ops.segment_softmax(scores, segments, 4), Tensor(weights))), [scores]) < 1e-6


class PTestDropout:
    def test_identity_cases(self):
        x = Tensor(np.ones((3, 3)))
        assert ops.dropout(x, 0.0, True, rng_stream(0, "t")) is x
        assert ops.dropout(x, 0.9, False, None) is x

    def test_invalid_probability(self):
        with pytest.raises(IllegalArgumentError):
            ops.dropout(Tensor([1.0]), 1.0, True, rng_stream(0, "t"))

    def test_inverted_scaling_mean(self):
        x = Tensor(np.full(10_000, 3.0))
        result = ops.dropout(x, 0.5, True, rng_stream(5, "dropout"))
        assert result.data.mean() == pytest.approx(3.0, rel=0.05)
        assert set(np.unique(result.data)) <= {0.0, 6.0}

    def test_deterministic_per_seed(self):
        x = Tensor(np.ones(50))
        first = ops.dropout(x, 0.3, True, rng_stream(9, "dropout")).data
        second = ops.dropout(x, 0.3, True, rng_stream(9, "dropout")).data
        assert np.array_equal(first, second)


class PTestWeightedCrossEntropy:
    def test_backward_from_scalar_loss_is_warning_free(self):
        logits = Tensor(np.zeros((2, 2)), requires_grad=True)

        with warnings.catch_warnings():
            warnings.simplefilter("error")

            with Tape() as tape:
                loss = ops.weighted_cross_entropy(logits, [0, 1], [1.0, 1.0])

            tape.backward(loss)

        assert np.allclose(logits.grad, [[-0.25, 0.25], [0.25, -0.25]])

    def test_uniform_logits(self):
        loss = ops.weighted_cross_entropy(Tensor(np.zeros((4, 3))), [0, 1, 2, 0], np.ones(3))
        assert loss.item() == pytest.approx(math.log(3.0))

    def test_weight_cancels_for_single_sample(self):
        logits = Tensor([[math.log(0.9), math.log(0.1)]])
        loss = ops.weighted_cross_entropy(logits, [0], [2.0, 1.0])
        assert loss.item() == pytest.approx(-math.log(0.9), abs=1e-12)
        assert loss.item() == pytest.approx(0.10536, abs=1e-5)

    def test_confident_prediction_has_no_loss(self):
        loss = ops.weighted_cross_entropy(Tensor([[50.0, -50.0]]), [0], [1.0, 1.0])
        assert loss.item() < 1e-12

    def test_invalid_label(self):
        with pytest.raises(InvalidLabelError):
            ops.weighted_cross_entropy(Tensor(np.zeros((1, 2))), [2], [1.0, 1.0])

    def test_gradcheck(self):
        rng = np.random.default_rng(3)
        logits = Tensor(rng.standard_normal((5, 3)))
        labels = [0, 2, 1, 1, 0]
        assert gradcheck(lambda: ops.weighted_cross_entropy(logits, labels, [0.5, 2.0, 1.0]), [logits]) < 1e-6


class PTestOpsGradients:
    @pytest.mark.parametrize("seed", range(5))
    def test_composite_gradcheck(self, seed):
        rng = np.random.default_rng(seed)
        x = Tensor(_away_from_zero(rng, (4, 3)))
        w = Tensor(rng.standard_normal((3, 2)))
        row = Tensor(rng.standard_normal(2))
        scale = Tensor(rng.uniform(0.5, 1.5, size=4))
        index = [0, 2, 2, 3, 1]

        def loss() -> Tensor:
            hidden = ops.add_row(ops.matmul(ops.leaky_relu(x, 0.2), w), row)
            gathered = ops.gather_rows(ops.scale_rows(hidden, scale), index)
            return _total(ops.relu(ops.segment_sum(gathered, [0, 0, 1, 2, 2], 3)))

        assert gradcheck(loss, [x, w, row, scale]) < 1e-4

    def test_square(self):
        x = Tensor([3.0])
        assert gradcheck(lambda: _total(_product(x, x)), [x]) < 1e-8

    def test_linear_is_exact(self):
        x = Tensor([[1.0, -2.0]])
        w = Tensor([[0.5], [0.25]])
        assert gradcheck(lambda: _total(ops.matmul(x, w)), [x, w]) < 1e-8


class PTestTape:
    def test_non_scalar_loss(self):
        with Tape() as tape:
            output = ops.relu(Tensor([1.0, 2.0], requires_grad=True))

        with pytest.raises(TapeError):
            tape.backward(output)

    def test_nothing_recorded_without_tape(self):
        x = Tensor([1.0], requires_grad=True)
        ops.relu(x)

        with Tape() as tape:
            pass

        assert tape.nodes == ()

    def test_shared_input_accumulates(self):
        x = Tensor([2.0], requires_grad=True)

        with Tape() as tape:
            loss = _total(ops.add(_product(x, x), x))

        tape.backward(loss)
        assert x.grad[0] == pytest.approx(5.0)


class PTestAdam:
    def test_zero_gradient_is_noop(self):
        param = Parameter([1.5, -2.0])

        for _ in range(3):
            adam_step([param])

        assert param.data.tolist() == [1.5, -2.0]
        assert param.step_count == 3

    def test_first_step_moves_by_lr(self):
        param = Parameter([0.0])
        param.grad = np.array([1.0])
        adam_step([param], lr=0.01)
        assert param.data[0] == pytest.approx(-0.01, abs=1e-6)
        assert param.grad.tolist() == [0.0]

    def test_zero_lr(self):
        param = Parameter([0.7])
        param.grad = np.array([3.0])
        Adam([param], lr=0.0).step()
        assert param.data.tolist() == [0.7]


class PTestRandomStreams:
    def test_same_seed_and_tag(self):
        assert np.array_equal(rng_stream(4, "a").random(5), rng_stream(4, "a").random(5))

    def test_tags_are_independent(self):
        assert not np.array_equal(rng_stream(4, "a").random(5), rng_stream(4, "b").random(5))
