from typing import Sequence

import numpy as np

from .tensor import Parameter


def adam_step(
        params: Sequence[Parameter],
        lr: float = 0.01,
        beta1: float = 0.9,
        beta2: float = 0.999,
        eps: float = 1e-8
) -> None:
    """
    One bias-corrected Adam update for every parameter, in place; gradients are zeroed afterwards.

    :param params: `Sequence[Parameter]`
        Parameters with populated `grad`

    :param lr: `float`
        Learning rate

    :param beta1: `float`
        Decay of the first moment estimate

    :param beta2: `float`
        Decay of the second moment estimate

    :param eps: `float`
        Denominator term
    """

    for param in params:
        param.step_count += 1
        grad = param.grad if param.grad is not None else np.zeros_like(param.data)

        param.adam_m = beta1 * param.adam_m + (1.0 - beta1) * grad
        param.adam_v = beta2 * param.adam_v + (1.0 - beta2) * grad * grad

        m_hat = param.adam_m / (1.0 - beta1 ** param.step_count)
        v_hat = param.adam_v / (1.0 - beta2 ** param.step_count)

        param.data -= lr * m_hat / (np.sqrt(v_hat) + eps)
        param.zero_grad()


class Adam:
    """
    Adam optimizer bound to a fixed parameter list.
    """

    def __init__(
            self,
            params: Sequence[Parameter],
            lr: float = 0.01,
            beta1: float = 0.9,
            beta2: float = 0.999,
            eps: float = 1e-8
    ) -> None:
        self.params = list(params)
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps

    def step(self) -> None:
        adam_step(self.params, lr=self.lr, beta1=self.beta1, beta2=self.beta2, eps=self.eps)

    def zero_grad(self) -> None:
        for param in self.params:
            param.zero_grad()
