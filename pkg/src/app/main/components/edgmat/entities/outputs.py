from dataclasses import dataclass

from pydantic import Field

from src.app.bases.autograd import Tensor
from src.app.bases.schemas import BaseSchema
from src.core.utils.types import FloatArray, IntArray


@dataclass(frozen=True)
class ForwardOutput:
    """
    Result of one forward pass.

    `attention[t][k]` holds the softmax-normalized coefficients of layer t, head k, per edge
    (before attention dropout).
    """

    node_embeddings: Tensor
    edge_embeddings: Tensor
    logits: Tensor
    attention: tuple[tuple[FloatArray, ...], ...]


@dataclass(frozen=True)
class EdgePredictions:
    classes: IntArray
    probabilities: FloatArray


class EpochRecord(BaseSchema):
    epoch: int = Field(ge=1)
    loss: float
    train_accuracy: float


class TrainingTrace(BaseSchema):
    epochs: tuple[EpochRecord, ...] = ()

    @property
    def losses(self) -> list[float]:
        return [record.loss for record in self.epochs]
