"""
Gradient diagnostics: the full class-weighted training loss of the model, checked against
central finite differences on small random socket graphs.
"""

import logging
import re

import numpy as np

from src.app.bases.autograd import Tensor, gradcheck_errors, ops, rng_stream
from src.app.main.components.edgmat.entities import ModelConfig
from src.app.main.components.graph.entities import FlowGraph, EdgeMask, InitRule
from src.app.main.components.graph.services import assemble_transductive
from src.app.main.components.ingest.entities import FlowRecord
from .model import EdgmatModel
from .trainer import class_weights

_logger = logging.getLogger(__name__)

_HEAD_PATTERN = re.compile(r"\.head\d+")


def parameter_group(name: str) -> str:
    """
    `layer0.head1.W_n` -> `layer0.W_n`: heads of one layer share a group.
    """

    return _HEAD_PATTERN.sub("", name)


def random_records(
        rng: np.random.Generator,
        feature_dim: int,
        num_classes: int,
        max_nodes: int = 5,
        max_edges: int = 8
) -> list[FlowRecord]:
    """
    Flows between at most `max_nodes` sockets, parallel edges and self-loops allowed.
    Labels cycle through the classes before shuffling, so every class is present
    whenever there are at least `num_classes` edges.
    """

    num_nodes = int(rng.integers(2, max_nodes + 1))
    num_edges = int(rng.integers(max(num_classes, 1), max_edges + 1))
    sockets = [(f"10.0.0.{index + 1}", 1000 + index) for index in range(num_nodes)]
    labels = rng.permutation(np.arange(num_edges) % num_classes)

    records = []

    for position in range(num_edges):
        (src_ip, src_port), (dst_ip, dst_port) = (sockets[int(index)] for index in rng.integers(0, num_nodes, size=2))
        records.append(FlowRecord(
            src_ip=src_ip,
            src_port=src_port,
            dst_ip=dst_ip,
            dst_port=dst_port,
            features=tuple(rng.standard_normal(feature_dim).tolist()),
            label=int(labels[position]),
            row_index=position
        ))

    return records


def jitter_biases(model: EdgmatModel, rng: np.random.Generator, low: float = 0.1, high: float = 0.5) -> None:
    """
    Moves every bias to a random value with magnitude in [low, high).
    With zero biases a node without in-edges whose inputs are all dropped sits exactly on the ReLU kink.
    """

    for name, param in model.named_parameters():
        if name.endswith(".bias") or name == "decoder.b":
            param.data[...] = rng.uniform(low, high, size=param.shape) * rng.choice([-1.0, 1.0], size=param.shape)


def training_loss(model: EdgmatModel, graph: FlowGraph, weights: np.ndarray, dropout_seed: int) -> Tensor:
    """
    Class-weighted cross-entropy over the train-masked edges, with a dropout mask that
    is identical on every call.
    """

    train_edges = graph.edges_with_mask(EdgeMask.TRAIN)
    output = model.forward(graph, training=True, rng=rng_stream(dropout_seed, "gradcheck:dropout"))
    return ops.weighted_cross_entropy(ops.gather_rows(output.logits, train_edges), graph.labels[train_edges], weights)


def gradcheck_model(model: EdgmatModel, graph: FlowGraph, dropout_seed: int = 0, h: float = 1e-6) -> dict[str, float]:
    """
    :return: `dict[str, float]`
        Max relative gradient error per parameter group
    """

    train_labels = graph.labels[graph.edges_with_mask(EdgeMask.TRAIN)]
    weights = class_weights(train_labels, model.config.num_classes)
    named = model.named_parameters()

    errors = gradcheck_errors(
        lambda: training_loss(model, graph, weights, dropout_seed),
        [param for _, param in named],
        h=h
    )

    grouped: dict[str, float] = {}

    for (name, _), error in zip(named, errors):
        group = parameter_group(name)
        grouped[group] = max(grouped.get(group, 0.0), error)

    return grouped


def run_gradcheck(num_graphs: int, seed: int = 0, max_nodes: int = 5, max_edges: int = 8) -> dict[str, float]:
    """
    Gradient check on `num_graphs` random graphs with random small dimensions
    (heads <= 2, hidden <= 4, edge features <= 4, two conv layers).

    :return: `dict[str, float]`
        Worst relative error per parameter group over all graphs
    """

    rng = rng_stream(seed, "gradcheck:graphs")
    worst: dict[str, float] = {}

    for index in range(num_graphs):
        feature_dim = int(rng.integers(1, 5))
        num_classes = int(rng.integers(2, 4))
        records = random_records(rng, feature_dim, num_classes, max_nodes=max_nodes, max_edges=max_edges)
        graph = assemble_transductive(records, [], InitRule())

        config = ModelConfig(
            layers=2,
            heads=int(rng.integers(1, 3)),
            hidden=int(rng.integers(1, 5)),
            num_classes=num_classes,
            seed=seed + index
        )
        model = EdgmatModel(config, graph.node_feature_dim, graph.edge_feature_dim)
        jitter_biases(model, rng)

        for group, error in gradcheck_model(model, graph, dropout_seed=seed + index).items():
            worst[group] = max(worst.get(group, 0.0), error)

        _logger.debug(f"Gradcheck graph {index + 1}/{num_graphs}: {graph.num_nodes} nodes, {graph.num_edges} edges")

    return worst
