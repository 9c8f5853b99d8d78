from src.core.exceptions import IllegalArgumentError
from .base import GraphError


class OverlappingRecordsError(GraphError):
    def __init__(self, row_indices: list[int]) -> None:
        shown = ", ".join(str(index) for index in row_indices[:10])
        super().__init__(f"train and test share {len(row_indices)} record(s): row_index {shown}")
        self.row_indices = row_indices


class NodeIndexError(GraphError, IllegalArgumentError, IndexError):
    def __init__(self, node: int, num_nodes: int) -> None:
        super().__init__(f"node {node} out of range for a graph with {num_nodes} nodes")
        self.node = node
