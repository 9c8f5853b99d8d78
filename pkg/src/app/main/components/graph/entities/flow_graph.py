from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.app.main.components.ingest.entities import SocketKey
from src.core.utils.types import FloatArray, IntArray
from .flow_edge import FlowEdge, EdgeMask, MASK_CODES, MASKS_BY_CODE
from .socket_node import SocketNode


@dataclass(frozen=True, eq=False)
class FlowGraph:
    """
    Directed socket multigraph in array form.

    Nodes are indexed densely in first-appearance order; edge `e` runs `src[e] -> dst[e]`.
    In-adjacency is CSR-style: the in-edges of node `v` are
    `in_edge_ids[in_offsets[v]:in_offsets[v + 1]]`, in insertion order.
    All arrays are read-only; a built graph may be shared between threads.
    """

    node_keys: tuple[SocketKey, ...]
    node_features: FloatArray
    src: IntArray
    dst: IntArray
    edge_features: FloatArray
    labels: IntArray
    record_indices: IntArray
    mask_codes: IntArray
    in_offsets: IntArray
    in_edge_ids: IntArray

    def __post_init__(self) -> None:
        for name in ("node_features", "src", "dst", "edge_features", "labels",
                     "record_indices", "mask_codes", "in_offsets", "in_edge_ids"):
            getattr(self, name).setflags(write=False)

    @property
    def num_nodes(self) -> int:
        return len(self.node_keys)

    @property
    def num_edges(self) -> int:
        return int(self.src.shape[0])

    @property
    def node_feature_dim(self) -> int:
        return int(self.node_features.shape[1])

    @property
    def edge_feature_dim(self) -> int:
        return int(self.edge_features.shape[1])

    def mask_of(self, edge: int) -> EdgeMask:
        return MASKS_BY_CODE[int(self.mask_codes[edge])]

    def edges_with_mask(self, mask: EdgeMask) -> IntArray:
        return np.flatnonzero(self.mask_codes == MASK_CODES[mask])

    def edge(self, index: int) -> FlowEdge:
        return FlowEdge(
            index=index,
            src=int(self.src[index]),
            dst=int(self.dst[index]),
            features=tuple(self.edge_features[index].tolist()),
            label=int(self.labels[index]),
            record_index=int(self.record_indices[index]),
            mask=self.mask_of(index)
        )

    @cached_property
    def nodes(self) -> tuple[SocketNode, ...]:
        return tuple(
            SocketNode(key=key, index=index, h0=tuple(self.node_features[index].tolist()))
            for index, key in enumerate(self.node_keys)
        )

    @cached_property
    def edges(self) -> tuple[FlowEdge, ...]:
        return tuple(self.edge(index) for index in range(self.num_edges))
