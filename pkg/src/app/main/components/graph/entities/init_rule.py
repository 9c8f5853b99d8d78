from enum import Enum

import numpy as np
from pydantic import Field

from src.app.bases.schemas import BaseSchema
from src.core.utils.types import FloatArray


class NodeInitKind(Enum):
    ONES = "ones"
    ZEROS = "zeros"
    CONSTANT = "constant"


class InitRule(BaseSchema):
    """
    Initial node feature rule. Every node receives the same vector, so node features
    carry no identity. `dim=None` means "same width as the edge features".
    """

    kind: NodeInitKind = NodeInitKind.ONES
    value: float = 1.0
    dim: int | None = Field(default=None, ge=1)

    def fill_value(self) -> float:
        return {
            NodeInitKind.ONES: 1.0,
            NodeInitKind.ZEROS: 0.0,
            NodeInitKind.CONSTANT: self.value
        }[self.kind]

    def matrix(self, num_nodes: int, edge_feature_dim: int) -> FloatArray:
        width = self.dim if self.dim is not None else edge_feature_dim
        return np.full((num_nodes, width), self.fill_value())
