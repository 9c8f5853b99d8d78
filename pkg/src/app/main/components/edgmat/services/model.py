import logging
from typing import Iterator

import numpy as np

from src.app.bases.autograd import Parameter, Tensor, ops
from src.app.main.components.edgmat.entities import (
    EdgmatLayerParams,
    ModelConfig,
    ForwardOutput,
    EdgePredictions
)
from src.app.main.components.edgmat.exceptions import DimensionMismatchError
from src.app.main.components.graph.entities import FlowGraph
from .layer import init_layer, glorot_parameter, project, attention_coefficients, node_update, edge_update

_logger = logging.getLogger(__name__)


def softmax_rows(logits: np.ndarray) -> np.ndarray:
    return np.exp(ops.log_softmax_rows(logits))


class EdgmatModel:
    """
    Stack of edge-featured attention conv layers followed by a linear decoder over the final edge embeddings.

    :param config: `ModelConfig`
        Hyper-parameters; `layers`, `heads`, `hidden` and `num_classes` fix the parameter shapes

    :param node_feature_dim: `int`
        Width of the initial node features h0

    :param edge_feature_dim: `int`
        Width of the encoded flow features e0
    """

    def __init__(
            self,
            config: ModelConfig,
            node_feature_dim: int,
            edge_feature_dim: int,
            layers: list[EdgmatLayerParams] | None = None,
            decoder_weights: Parameter | None = None,
            decoder_bias: Parameter | None = None
    ) -> None:
        self.config = config
        self.node_feature_dim = node_feature_dim
        self.edge_feature_dim = edge_feature_dim

        self.layers = layers if layers is not None else self._init_layers()
        self.decoder_weights = decoder_weights if decoder_weights is not None else glorot_parameter(
            (config.edge_embedding_dim, config.num_classes), config.seed, "decoder.W"
        )
        self.decoder_bias = decoder_bias if decoder_bias is not None else Parameter(np.zeros(config.num_classes), name="decoder.b")

    def _init_layers(self) -> list[EdgmatLayerParams]:
        layers = []
        in_node_dim, in_edge_dim = self.node_feature_dim, self.edge_feature_dim

        for index in range(self.config.layers):
            layer = init_layer(
                in_node_dim, in_edge_dim, self.config.hidden, self.config.heads, self.config.seed, f"layer{index}"
            )
            layers.append(layer)
            in_node_dim, in_edge_dim = layer.out_node_dim, layer.out_edge_dim

        return layers

    def named_parameters(self) -> list[tuple[str, Parameter]]:
        """
        Every learnable tensor with its stable name, in checkpoint manifest order.
        """

        named: list[tuple[str, Parameter]] = []

        for index, layer in enumerate(self.layers):
            named.extend(layer.named_parameters(f"layer{index}"))

        named.append(("decoder.W", self.decoder_weights))
        named.append(("decoder.b", self.decoder_bias))
        return named

    def parameters(self) -> list[Parameter]:
        return [param for _, param in self.named_parameters()]

    def __iter__(self) -> Iterator[Parameter]:
        return iter(self.parameters())

    def check_graph(self, graph: FlowGraph) -> None:
        if graph.num_nodes and graph.node_feature_dim != self.node_feature_dim:
            raise DimensionMismatchError("node feature dimension", self.node_feature_dim, graph.node_feature_dim)

        if graph.num_edges and graph.edge_feature_dim != self.edge_feature_dim:
            raise DimensionMismatchError("edge feature dimension", self.edge_feature_dim, graph.edge_feature_dim)

    def forward(self, graph: FlowGraph, training: bool = False, rng: np.random.Generator | None = None) -> ForwardOutput:
        """
        One pass over the whole graph.

        In training mode dropout hits the node inputs of every conv layer and the attention
        coefficients after normalization (no renormalization); `rng` is then required.
        Outside training the pass is deterministic.

        :raises:
            :raise DimensionMismatchError: If the graph features do not match the model
        """

        self.check_graph(graph)

        config = self.config
        node_inputs = Tensor(graph.node_features.reshape(graph.num_nodes, self.node_feature_dim))
        edge_inputs = Tensor(graph.edge_features.reshape(graph.num_edges, self.edge_feature_dim))
        attention: list[tuple[np.ndarray, ...]] = []

        for index, layer in enumerate(self.layers):
            node_inputs = ops.dropout(node_inputs, config.dropout, training, rng)
            projections = [project(layer, node_inputs, edge_inputs, head) for head in range(layer.heads)]

            alphas = [
                attention_coefficients(
                    layer, graph, node_inputs, edge_inputs, head,
                    leaky_slope=config.leaky_slope, projection=projections[head]
                )
                for head in range(layer.heads)
            ]
            attention.append(tuple(alpha.numpy() for alpha in alphas))
            alphas = [ops.dropout(alpha, config.dropout, training, rng) for alpha in alphas]

            last = index == len(self.layers) - 1

            next_nodes = node_update(
                layer, graph, node_inputs, edge_inputs, alphas, activate=not last, projections=projections
            )
            edge_inputs = edge_update(layer, graph, node_inputs, edge_inputs, alphas, projections=projections)
            node_inputs = next_nodes

        logits = ops.add_row(ops.matmul(edge_inputs, self.decoder_weights), self.decoder_bias)

        return ForwardOutput(
            node_embeddings=node_inputs,
            edge_embeddings=edge_inputs,
            logits=logits,
            attention=tuple(attention)
        )

    def predict(self, graph: FlowGraph) -> EdgePredictions:
        """
        Softmax class probabilities per edge and the argmax class (lowest index wins ties).
        """

        logits = self.forward(graph, training=False).logits.data
        probabilities = softmax_rows(logits)

        return EdgePredictions(
            classes=np.argmax(logits, axis=1).astype(np.int64) if len(logits) else np.zeros(0, dtype=np.int64),
            probabilities=probabilities
        )
