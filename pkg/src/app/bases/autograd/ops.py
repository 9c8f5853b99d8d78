"""
Differentiable operations used by the attention model.

Every function takes and returns `Tensor` objects and records its backward rule on the
active `Tape`. There is no general broadcasting: row-vector bias addition and per-row
scaling are explicit operations.
"""

from typing import Sequence

import numpy as np

from src.core.exceptions import IllegalArgumentError
from src.core.utils.types import FloatArray, IntArray
from .exceptions import ShapeMismatchError, InvalidLabelError
from .tape import record
from .tensor import Tensor


def _as_index(index: Sequence[int] | IntArray) -> IntArray:
    return np.asarray(index, dtype=np.int64).reshape(-1)


def matmul(a: Tensor, b: Tensor) -> Tensor:
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeMismatchError("matmul", a.shape, b.shape)

    return record(
        "matmul", (a, b), a.data @ b.data,
        lambda grad: (grad @ b.data.T, a.data.T @ grad)
    )


def add(a: Tensor, b: Tensor) -> Tensor:
    if a.shape != b.shape:
        raise ShapeMismatchError("add", a.shape, b.shape)

    return record("add", (a, b), a.data + b.data, lambda grad: (grad, grad))


def add_row(x: Tensor, row: Tensor) -> Tensor:
    """
    Adds the vector `row` (length m) to every row of `x` (n x m).
    """

    if x.ndim != 2 or row.shape != (x.shape[1],):
        raise ShapeMismatchError("add_row", x.shape, row.shape)

    return record("add_row", (x, row), x.data + row.data, lambda grad: (grad, grad.sum(axis=0)))


def reshape(x: Tensor, shape: tuple[int, ...]) -> Tensor:
    try:
        data = x.data.reshape(shape)
    except ValueError as error:
        raise ShapeMismatchError("reshape", x.shape, shape) from error

    return record("reshape", (x,), data, lambda grad: (grad.reshape(x.shape),))


def concat(tensors: Sequence[Tensor], axis: int = 0) -> Tensor:
    """
    Concatenates tensors along `axis`; all other dimensions must agree.
    """

    if not tensors:
        raise IllegalArgumentError("concat needs at least one tensor")

    first = tensors[0]

    for tensor in tensors[1:]:
        other_dims_match = tensor.ndim == first.ndim and all(
            size == first.shape[dim] for dim, size in enumerate(tensor.shape) if dim != axis % first.ndim
        )

        if not other_dims_match:
            raise ShapeMismatchError("concat", *(t.shape for t in tensors))

    if len(tensors) == 1:
        return first

    offsets = np.cumsum([tensor.shape[axis] for tensor in tensors])[:-1]

    return record(
        "concat", tuple(tensors), np.concatenate([tensor.data for tensor in tensors], axis=axis),
        lambda grad: tuple(np.split(grad, offsets, axis=axis))
    )


def gather_rows(x: Tensor, index: Sequence[int] | IntArray) -> Tensor:
    """
    Selects rows `x[index]` (repetitions allowed); the backward pass scatter-adds.
    """

    index = _as_index(index)

    if x.ndim != 2:
        raise ShapeMismatchError("gather_rows", x.shape)

    if index.size and (index.min() < 0 or index.max() >= x.shape[0]):
        raise IllegalArgumentError(f"gather_rows: index out of range for {x.shape[0]} rows")

    def backward(grad: FloatArray) -> tuple[FloatArray]:
        result = np.zeros_like(x.data)
        np.add.at(result, index, grad)
        return (result,)

    return record("gather_rows", (x,), x.data[index], backward)


def scale_rows(x: Tensor, weights: Tensor) -> Tensor:
    """
    Multiplies row i of `x` (n x m) by `weights[i]`.
    """

    if x.ndim != 2 or weights.shape != (x.shape[0],):
        raise ShapeMismatchError("scale_rows", x.shape, weights.shape)

    column = weights.data[:, None]

    return record(
        "scale_rows", (x, weights), x.data * column,
        lambda grad: (grad * column, (grad * x.data).sum(axis=1))
    )


def segment_sum(x: Tensor, segments: Sequence[int] | IntArray, num_segments: int) -> Tensor:
    """
    Sums rows of `x` sharing a segment id into row `segment` of a (num_segments x m) result.
    Segments without rows stay zero.
    """

    segments = _as_index(segments)

    if x.ndim != 2 or segments.shape[0] != x.shape[0]:
        raise ShapeMismatchError("segment_sum", x.shape, segments.shape)

    result = np.zeros((num_segments, x.shape[1]))
    np.add.at(result, segments, x.data)

    return record("segment_sum", (x,), result, lambda grad: (grad[segments],))


def leaky_relu(x: Tensor, slope: float = 0.2) -> Tensor:
    """
    `x` where positive, `slope * x` otherwise; the derivative at 0 is `slope`.
    """

    if slope < 0:
        raise IllegalArgumentError(f"leaky_relu slope must be >= 0, got {slope}")

    factor = np.where(x.data > 0, 1.0, slope)
    return record("leaky_relu", (x,), x.data * factor, lambda grad: (grad * factor,))


def relu(x: Tensor) -> Tensor:
    factor = (x.data > 0).astype(np.float64)
    return record("relu", (x,), x.data * factor, lambda grad: (grad * factor,))


def segment_softmax(scores: Tensor, segments: Sequence[int] | IntArray, num_segments: int) -> Tensor:
    """
    Softmax computed independently inside each group of scores sharing a segment id
    (here: the in-edges of one destination node). The per-segment maximum is subtracted
    before exponentiation.

    :param scores: `Tensor`
        Vector of shape (n,)

    :param segments: `Sequence[int] | IntArray`
        Segment id per score, each in `[0, num_segments)`

    :param num_segments: `int`
        Number of segments

    :return: `Tensor`
        Vector of shape (n,) summing to 1 inside every non-empty segment
    """

    segments = _as_index(segments)

    if scores.ndim != 1 or segments.shape != scores.shape:
        raise ShapeMismatchError("segment_softmax", scores.shape, segments.shape)

    if segments.size and (segments.min() < 0 or segments.max() >= num_segments):
        raise IllegalArgumentError(f"segment_softmax: segment id out of range for {num_segments} segments")

    maxima = np.full(num_segments, -np.inf)
    np.maximum.at(maxima, segments, scores.data)

    exponents = np.exp(scores.data - maxima[segments])
    denominators = np.zeros(num_segments)
    np.add.at(denominators, segments, exponents)

    alpha = exponents / denominators[segments]

    def backward(grad: FloatArray) -> tuple[FloatArray]:
        weighted = np.zeros(num_segments)
        np.add.at(weighted, segments, grad * alpha)
        return (alpha * (grad - weighted[segments]),)

    return record("segment_softmax", (scores,), alpha, backward)


def dropout(x: Tensor, p: float, training: bool, rng: np.random.Generator | None) -> Tensor:
    """
    Inverted dropout: during training each element is zeroed with probability `p` and the
    survivors are scaled by 1 / (1 - p); outside training the input is returned unchanged.
    """

    if not 0 <= p < 1:
        raise IllegalArgumentError(f"dropout probability must be in [0, 1), got {p}")

    if not training or p == 0:
        return x

    if rng is None:
        raise IllegalArgumentError("dropout in training mode needs a random generator")

    mask = (rng.random(x.shape) >= p) / (1.0 - p)
    return record("dropout", (x,), x.data * mask, lambda grad: (grad * mask,))


def log_softmax_rows(logits: FloatArray) -> FloatArray:
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


def weighted_cross_entropy(
        logits: Tensor,
        labels: Sequence[int] | IntArray,
        class_weights: Sequence[float] | FloatArray
) -> Tensor:
    """
    Class-weighted mean negative log-likelihood:
    sum_i w[y_i] * -log softmax(logits_i)[y_i] / sum_i w[y_i].

    :raises:
        :raise InvalidLabelError: If a label is outside `[0, C)`
        :raise IllegalArgumentError: On negative weights or a zero total weight
    """

    labels = _as_index(labels)
    weights = np.asarray(class_weights, dtype=np.float64)

    if logits.ndim != 2 or labels.shape[0] != logits.shape[0] or weights.shape != (logits.shape[1],):
        raise ShapeMismatchError("weighted_cross_entropy", logits.shape, labels.shape, weights.shape)

    num_classes = logits.shape[1]

    if labels.size and (labels.min() < 0 or labels.max() >= num_classes):
        raise InvalidLabelError(f"labels must be in [0, {num_classes}), got range [{labels.min()}, {labels.max()}]")

    if (weights < 0).any():
        raise IllegalArgumentError("class weights must be non-negative")

    sample_weights = weights[labels]
    weight_total = sample_weights.sum()

    if weight_total <= 0:
        raise IllegalArgumentError("class weights of the given labels sum to zero")

    log_probs = log_softmax_rows(logits.data)
    rows = np.arange(labels.shape[0])
    loss = -(sample_weights * log_probs[rows, labels]).sum() / weight_total

    def backward(grad: FloatArray) -> tuple[FloatArray]:
        result = np.exp(log_probs)
        result[rows, labels] -= 1.0
        return (result * (sample_weights / weight_total)[:, None] * grad.reshape(-1)[0],)

    return record("weighted_cross_entropy", (logits,), np.asarray(loss), backward)
