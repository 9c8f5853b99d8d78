from contextvars import ContextVar, Token
from dataclasses import dataclass
from typing import Callable

from typing_extensions import Self, TypeAlias

import numpy as np

from src.core.utils.types import FloatArray
from .exceptions import TapeError
from .tensor import Tensor

BackwardFn: TypeAlias = Callable[[FloatArray], tuple[FloatArray | None, ...]]

_active_tape: ContextVar['Tape | None'] = ContextVar("active_tape", default=None)


@dataclass(frozen=True, slots=True)
class TapeNode:
    """
    One recorded operation: its kind, inputs, output and the closure mapping
    the output gradient to one gradient (or None) per input.
    """

    op: str
    inputs: tuple[Tensor, ...]
    output: Tensor
    backward: BackwardFn


class Tape:
    """
    Records operations in execution order while active (`with Tape() as tape:`).

    Each thread or context has its own active tape, so independent computations
    may be recorded concurrently on separate threads.
    """

    def __init__(self) -> None:
        self._nodes: list[TapeNode] = []
        self._token: Token | None = None

    def __enter__(self) -> Self:
        self._token = _active_tape.set(self)
        return self

    def __exit__(self, *_) -> None:
        if self._token is not None:
            _active_tape.reset(self._token)
            self._token = None

    @property
    def nodes(self) -> tuple[TapeNode, ...]:
        return tuple(self._nodes)

    def record(self, node: TapeNode) -> None:
        self._nodes.append(node)

    def backward(self, loss: Tensor) -> None:
        """
        Propagates d(loss)/d(.) through the recorded nodes in strict reverse execution order
        and accumulates the result into the `grad` of every leaf that requires it.

        :param loss: `Tensor`
            Single-element tensor produced under this tape

        :raises:
            :raise TapeError: If `loss` has more than one element
        """

        if loss.data.size != 1:
            raise TapeError(f"backward needs a scalar loss, got shape {loss.shape}")

        produced = {id(node.output) for node in self._nodes}
        grads: dict[int, FloatArray] = {id(loss): np.ones_like(loss.data)}

        if id(loss) not in produced and loss.requires_grad:
            loss.accumulate_grad(np.ones_like(loss.data))
            return

        for node in reversed(self._nodes):
            output_grad = grads.pop(id(node.output), None)

            if output_grad is None:
                continue

            for tensor, grad in zip(node.inputs, node.backward(output_grad)):
                if grad is None or not tensor.requires_grad:
                    continue

                if id(tensor) in produced:
                    key = id(tensor)
                    grads[key] = grads[key] + grad if key in grads else grad
                else:
                    tensor.accumulate_grad(grad)


def current_tape() -> Tape | None:
    return _active_tape.get()


def record(op: str, inputs: tuple[Tensor, ...], data: FloatArray, backward: BackwardFn) -> Tensor:
    """
    Wraps `data` into the output tensor of `op` and records it on the active tape
    when one exists and any input requires a gradient.
    """

    output = Tensor(data)
    tape = current_tape()

    if tape is not None and any(tensor.requires_grad for tensor in inputs):
        output.requires_grad = True
        tape.record(TapeNode(op=op, inputs=inputs, output=output, backward=backward))

    return output
