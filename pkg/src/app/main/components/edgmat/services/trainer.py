import logging

import numpy as np

from src.app.bases.autograd import Adam, Tape, ops, rng_stream
from src.app.main.components.edgmat.entities import EpochRecord, TrainingTrace
from src.app.main.components.edgmat.exceptions import NoTrainingEdgesError
from src.app.main.components.graph.entities import FlowGraph, EdgeMask
from src.core.utils.types import FloatArray, IntArray
from .model import EdgmatModel

_logger = logging.getLogger(__name__)


def class_weights(labels: IntArray, num_classes: int) -> FloatArray:
    """
    Inverse-frequency weights `n_total / (C * n_c)`; classes absent from `labels` get 0.
    """

    counts = np.bincount(np.asarray(labels, dtype=np.int64), minlength=num_classes)[:num_classes]
    weights = np.zeros(num_classes)
    present = counts > 0
    weights[present] = counts.sum() / (num_classes * counts[present])

    absent = np.flatnonzero(~present).tolist()

    if absent:
        _logger.warning(f"Classes {absent} have no training edges; their loss weight is 0")

    return weights


def train(model: EdgmatModel, graph: FlowGraph, log_every: int = 10) -> TrainingTrace:
    """
    Full-graph training: each epoch runs one forward pass over the whole graph, takes the
    class-weighted cross-entropy over the train-masked edges only, back-propagates and
    applies one Adam step. Dropout draws from the run's `"dropout"` seed stream, so the
    resulting parameters and trace depend only on the seed.

    :param model: `EdgmatModel`
        Model updated in place

    :param graph: `FlowGraph`
        Graph whose train-masked edges provide the supervision

    :param log_every: `int`
        Epoch period of the INFO progress line (0 disables it)

    :return: `TrainingTrace`
        Loss and train accuracy per epoch

    :raises:
        :raise NoTrainingEdgesError: If the graph has no train-masked edge
        :raise DimensionMismatchError: If the graph features do not match the model
    """

    config = model.config
    train_edges = graph.edges_with_mask(EdgeMask.TRAIN)

    if not train_edges.size:
        raise NoTrainingEdgesError("graph has no train-masked edges")

    model.check_graph(graph)

    labels = graph.labels[train_edges]
    weights = class_weights(labels, config.num_classes)
    optimizer = Adam(model.parameters(), lr=config.lr, beta1=config.adam_beta1, beta2=config.adam_beta2, eps=config.adam_eps)
    rng = rng_stream(config.seed, "dropout")

    records: list[EpochRecord] = []
    _logger.info(f"Training on {train_edges.size} edges for {config.epochs} epochs")

    for epoch in range(1, config.epochs + 1):
        optimizer.zero_grad()

        with Tape() as tape:
            output = model.forward(graph, training=True, rng=rng)
            train_logits = ops.gather_rows(output.logits, train_edges)
            loss = ops.weighted_cross_entropy(train_logits, labels, weights)

        tape.backward(loss)
        optimizer.step()

        accuracy = float((np.argmax(train_logits.data, axis=1) == labels).mean())
        records.append(EpochRecord(epoch=epoch, loss=loss.item(), train_accuracy=accuracy))

        _logger.debug(f"Epoch {epoch}: loss {loss.item():.6f}, train accuracy {accuracy:.4f}")

        if log_every and (epoch % log_every == 0 or epoch == config.epochs):
            _logger.info(f"Epoch {epoch}/{config.epochs}: loss {loss.item():.6f}")

    return TrainingTrace(epochs=tuple(records))
