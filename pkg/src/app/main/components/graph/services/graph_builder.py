import logging
from typing import Sequence

import numpy as np

from src.app.main.components.graph.entities import FlowGraph, InitRule, EdgeMask, MASK_CODES
from src.app.main.components.graph.exceptions import OverlappingRecordsError, NodeIndexError
from src.app.main.components.ingest.entities import FlowRecord, SocketKey
from src.app.main.components.ingest.services import feature_matrix

_logger = logging.getLogger(__name__)


def _build(records: Sequence[FlowRecord], init: InitRule, masks: Sequence[EdgeMask]) -> FlowGraph:
    index_of: dict[SocketKey, int] = {}
    node_keys: list[SocketKey] = []
    src = np.empty(len(records), dtype=np.int64)
    dst = np.empty(len(records), dtype=np.int64)

    for position, record in enumerate(records):
        for key in (record.source, record.destination):
            if key not in index_of:
                index_of[key] = len(node_keys)
                node_keys.append(key)

        src[position] = index_of[record.source]
        dst[position] = index_of[record.destination]

    edge_features = feature_matrix(records)
    num_nodes = len(node_keys)

    in_edge_ids = np.argsort(dst, kind="stable").astype(np.int64)
    in_offsets = np.zeros(num_nodes + 1, dtype=np.int64)
    np.cumsum(np.bincount(dst, minlength=num_nodes), out=in_offsets[1:])

    return FlowGraph(
        node_keys=tuple(node_keys),
        node_features=init.matrix(num_nodes, edge_features.shape[1]),
        src=src,
        dst=dst,
        edge_features=edge_features,
        labels=np.array([record.label for record in records], dtype=np.int64),
        record_indices=np.array([record.row_index for record in records], dtype=np.int64),
        mask_codes=np.array([MASK_CODES[mask] for mask in masks], dtype=np.int64),
        in_offsets=in_offsets,
        in_edge_ids=in_edge_ids
    )


def build_graph(records: Sequence[FlowRecord], node_feature_init: InitRule | None = None) -> FlowGraph:
    """
    Builds the directed socket multigraph: one node per distinct (ip, port) over both
    endpoints in first-appearance order (a row's source before its destination) and one
    edge per record, source socket to destination socket. Edges carry no mask.
    """

    return _build(records, node_feature_init or InitRule(), [EdgeMask.NONE] * len(records))


def _check_disjoint(train: Sequence[FlowRecord], test: Sequence[FlowRecord]) -> None:
    shared = {record.row_index for record in train} & {record.row_index for record in test}

    if shared:
        raise OverlappingRecordsError(sorted(shared))


def assemble_transductive(
        train: Sequence[FlowRecord],
        test: Sequence[FlowRecord],
        init: InitRule | None = None
) -> FlowGraph:
    """
    One graph over train + test (train records first); edges are masked train or test.
    """

    _check_disjoint(train, test)

    graph = _build([*train, *test], init or InitRule(), [EdgeMask.TRAIN] * len(train) + [EdgeMask.TEST] * len(test))
    _logger.info(f"Transductive graph: {graph.num_nodes} nodes, {graph.num_edges} edges")
    return graph


def assemble_inductive(
        train: Sequence[FlowRecord],
        test: Sequence[FlowRecord],
        init: InitRule | None = None
) -> tuple[FlowGraph, FlowGraph]:
    """
    Two independent graphs with unrelated node index spaces: the train graph (all edges
    masked train) and the test graph (all edges masked test).
    """

    _check_disjoint(train, test)
    init = init or InitRule()

    train_graph = _build(train, init, [EdgeMask.TRAIN] * len(train))
    test_graph = _build(test, init, [EdgeMask.TEST] * len(test))

    _logger.info(
        f"Inductive graphs: train {train_graph.num_nodes} nodes / {train_graph.num_edges} edges, "
        f"test {test_graph.num_nodes} nodes / {test_graph.num_edges} edges"
    )
    return train_graph, test_graph


def in_edges(graph: FlowGraph, node: int) -> list[int]:
    """
    Ids of the edges whose destination is `node`, in insertion order.

    :raises:
        :raise NodeIndexError: If `node` is not a node of `graph`
    """

    if not 0 <= node < graph.num_nodes:
        raise NodeIndexError(node, graph.num_nodes)

    start, stop = graph.in_offsets[node], graph.in_offsets[node + 1]
    return graph.in_edge_ids[start:stop].tolist()
