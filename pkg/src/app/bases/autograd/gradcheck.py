from typing import Callable, Sequence

import numpy as np

from .tape import Tape
from .tensor import Tensor


def _relative_error(analytic: float, numeric: float) -> float:
    return abs(analytic - numeric) / max(1.0, abs(analytic), abs(numeric))


def gradcheck_errors(func: Callable[[], Tensor], inputs: Sequence[Tensor], h: float = 1e-6) -> list[float]:
    """
    Compares reverse-mode gradients of the scalar `func()` with central finite differences.

    `func` must be deterministic and read `inputs` through closure; the inputs are perturbed
    in place one element at a time and restored afterwards.

    :param func: `Callable[[], Tensor]`
        Scalar-valued computation

    :param inputs: `Sequence[Tensor]`
        Tensors to differentiate with respect to

    :param h: `float`
        Finite-difference step

    :return: `list[float]`
        Max over elements of |g_ad - g_fd| / max(1, |g_ad|, |g_fd|), one value per input
    """

    for tensor in inputs:
        tensor.requires_grad = True
        tensor.zero_grad()

    with Tape() as tape:
        output = func()

    tape.backward(output)

    errors = []

    for tensor in inputs:
        analytic = tensor.grad.reshape(-1) if tensor.grad is not None else np.zeros(tensor.data.size)
        flat = tensor.data.reshape(-1)
        worst = 0.0

        for position in range(flat.size):
            original = flat[position]

            flat[position] = original + h
            plus = func().item()
            flat[position] = original - h
            minus = func().item()
            flat[position] = original

            worst = max(worst, _relative_error(float(analytic[position]), (plus - minus) / (2.0 * h)))

        errors.append(worst)

    return errors


def gradcheck(func: Callable[[], Tensor], inputs: Sequence[Tensor], h: float = 1e-6) -> float:
    """
    Maximum relative gradient error over all `inputs` (see `gradcheck_errors`).
    """

    errors = gradcheck_errors(func, inputs, h=h)
    return max(errors) if errors else 0.0
