"""
Edge-featured multi-head graph attention convolution.

For an edge j -> i and head k:

    score   = LeakyReLU(a_k . [W_n_k h_i || W_n_k h_j || W_e_k e_ji])
    alpha   = softmax of the scores over the in-edges of i
    h_i'    = W_s h_i + ||_k sum_{j -> i} alpha_k (W_n_k h_j + W_e_k e_ji) + b
    e_ji'   = ||_k alpha_k [W_n_k h_j || W_e_k e_ji]

Aggregation runs along flow direction: a node only hears from edges arriving at it.
A node without in-edges keeps the residual and bias terms only.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src.app.bases.autograd import Parameter, Tensor, ops, rng_stream
from src.app.main.components.edgmat.entities import EdgmatLayerParams
from src.app.main.components.edgmat.exceptions import DimensionMismatchError
from src.app.main.components.graph.entities import FlowGraph


@dataclass(frozen=True)
class HeadProjection:
    """
    Per-head linear maps of the layer inputs: node rows (|V| x d) and edge rows (|E| x d).
    """

    nodes: Tensor
    edges: Tensor


def glorot_parameter(shape: tuple[int, int], seed: int, name: str) -> Parameter:
    limit = math.sqrt(6.0 / (shape[0] + shape[1]))
    return Parameter(rng_stream(seed, f"init:{name}").uniform(-limit, limit, size=shape), name=name)


def init_layer(in_node_dim: int, in_edge_dim: int, out_dim: int, heads: int, seed: int, prefix: str) -> EdgmatLayerParams:
    """
    Glorot-uniform weights, zero bias; every matrix draws from its own named seed stream.
    """

    return EdgmatLayerParams(
        in_node_dim=in_node_dim,
        in_edge_dim=in_edge_dim,
        out_dim=out_dim,
        node_weights=tuple(glorot_parameter((in_node_dim, out_dim), seed, f"{prefix}.head{k}.W_n") for k in range(heads)),
        edge_weights=tuple(glorot_parameter((in_edge_dim, out_dim), seed, f"{prefix}.head{k}.W_e") for k in range(heads)),
        attention=tuple(glorot_parameter((3 * out_dim, 1), seed, f"{prefix}.head{k}.a") for k in range(heads)),
        residual=glorot_parameter((in_node_dim, heads * out_dim), seed, f"{prefix}.W_s"),
        bias=Parameter(np.zeros(heads * out_dim), name=f"{prefix}.bias")
    )


def _check_inputs(layer: EdgmatLayerParams, graph: FlowGraph, node_inputs: Tensor, edge_inputs: Tensor) -> None:
    if node_inputs.shape != (graph.num_nodes, layer.in_node_dim):
        raise DimensionMismatchError("layer node input shape", layer.in_node_dim, node_inputs.shape[-1]) \
            if node_inputs.shape[0] == graph.num_nodes else \
            DimensionMismatchError("layer node input rows", graph.num_nodes, node_inputs.shape[0])

    if edge_inputs.shape != (graph.num_edges, layer.in_edge_dim):
        raise DimensionMismatchError("layer edge input shape", layer.in_edge_dim, edge_inputs.shape[-1]) \
            if edge_inputs.shape[0] == graph.num_edges else \
            DimensionMismatchError("layer edge input rows", graph.num_edges, edge_inputs.shape[0])


def project(layer: EdgmatLayerParams, node_inputs: Tensor, edge_inputs: Tensor, head: int) -> HeadProjection:
    return HeadProjection(
        nodes=ops.matmul(node_inputs, layer.node_weights[head]),
        edges=ops.matmul(edge_inputs, layer.edge_weights[head])
    )


def _projections(
        layer: EdgmatLayerParams,
        node_inputs: Tensor,
        edge_inputs: Tensor,
        projections: Sequence[HeadProjection] | None
) -> Sequence[HeadProjection]:
    if projections is not None:
        return projections

    return [project(layer, node_inputs, edge_inputs, head) for head in range(layer.heads)]


def attention_coefficients(
        layer: EdgmatLayerParams,
        graph: FlowGraph,
        node_inputs: Tensor,
        edge_inputs: Tensor,
        head: int,
        leaky_slope: float = 0.2,
        projection: HeadProjection | None = None
) -> Tensor:
    """
    Attention coefficient of every edge for one head, normalized over the in-edges of its destination.

    :return: `Tensor`
        Vector of shape (|E|,)
    """

    _check_inputs(layer, graph, node_inputs, edge_inputs)
    projection = projection or project(layer, node_inputs, edge_inputs, head)

    features = ops.concat([
        ops.gather_rows(projection.nodes, graph.dst),
        ops.gather_rows(projection.nodes, graph.src),
        projection.edges
    ], axis=1)

    scores = ops.reshape(ops.matmul(features, layer.attention[head]), (graph.num_edges,))
    scores = ops.leaky_relu(scores, leaky_slope)

    return ops.segment_softmax(scores, graph.dst, graph.num_nodes)


def node_update(
        layer: EdgmatLayerParams,
        graph: FlowGraph,
        node_inputs: Tensor,
        edge_inputs: Tensor,
        alphas: Sequence[Tensor],
        activate: bool = True,
        projections: Sequence[HeadProjection] | None = None
) -> Tensor:
    """
    New node embeddings (|V| x heads * out_dim): residual W_s h_i plus the concatenated
    per-head attention-weighted sums of W_n h_j + W_e e_ji, plus bias, then ReLU when `activate`.
    """

    _check_inputs(layer, graph, node_inputs, edge_inputs)
    projections = _projections(layer, node_inputs, edge_inputs, projections)

    aggregated = []

    for head, projection in enumerate(projections):
        messages = ops.add(ops.gather_rows(projection.nodes, graph.src), projection.edges)
        weighted = ops.scale_rows(messages, alphas[head])
        aggregated.append(ops.segment_sum(weighted, graph.dst, graph.num_nodes))

    updated = ops.add(ops.matmul(node_inputs, layer.residual), ops.concat(aggregated, axis=1))
    updated = ops.add_row(updated, layer.bias)

    return ops.relu(updated) if activate else updated


def edge_update(
        layer: EdgmatLayerParams,
        graph: FlowGraph,
        node_inputs: Tensor,
        edge_inputs: Tensor,
        alphas: Sequence[Tensor],
        projections: Sequence[HeadProjection] | None = None
) -> Tensor:
    """
    New edge embeddings (|E| x heads * 2 * out_dim): per head alpha_k [W_n h_j || W_e e_ji],
    heads concatenated. No activation.
    """

    _check_inputs(layer, graph, node_inputs, edge_inputs)
    projections = _projections(layer, node_inputs, edge_inputs, projections)

    blocks = [
        ops.scale_rows(
            ops.concat([ops.gather_rows(projection.nodes, graph.src), projection.edges], axis=1),
            alphas[head]
        )
        for head, projection in enumerate(projections)
    ]

    return ops.concat(blocks, axis=1)
