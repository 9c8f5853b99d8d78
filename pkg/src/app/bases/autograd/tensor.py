from typing import Any

import numpy as np

from src.core.utils.types import FloatArray


class Tensor:
    """
    Dense row-major float64 array taking part in reverse-mode differentiation.

    Tensors created by operations under an active `Tape` get `requires_grad` when any of their
    inputs requires it. Leaf tensors receive their gradient in `grad` after `Tape.backward`.
    """

    __slots__ = ("data", "grad", "requires_grad", "name")

    def __init__(self, data: Any, requires_grad: bool = False, name: str | None = None) -> None:
        self.data: FloatArray = np.ascontiguousarray(data, dtype=np.float64)
        self.grad: FloatArray | None = None
        self.requires_grad = requires_grad
        self.name = name

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    def numpy(self) -> FloatArray:
        return self.data.copy()

    def item(self) -> float:
        return float(self.data.reshape(-1)[0])

    def accumulate_grad(self, grad: FloatArray) -> None:
        if self.grad is None:
            self.grad = np.array(grad, dtype=np.float64, copy=True).reshape(self.shape)
        else:
            self.grad += grad.reshape(self.shape)

    def zero_grad(self) -> None:
        self.grad = None

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<{self.__class__.__name__}{label} shape={self.shape}>"


class Parameter(Tensor):
    """
    Learnable tensor with a gradient buffer and Adam moment estimates of the same shape.
    """

    __slots__ = ("adam_m", "adam_v", "step_count")

    def __init__(self, data: Any, name: str | None = None) -> None:
        super().__init__(data, requires_grad=True, name=name)
        self.grad = np.zeros_like(self.data)
        self.adam_m: FloatArray = np.zeros_like(self.data)
        self.adam_v: FloatArray = np.zeros_like(self.data)
        self.step_count = 0

    def zero_grad(self) -> None:
        self.grad = np.zeros_like(self.data)
