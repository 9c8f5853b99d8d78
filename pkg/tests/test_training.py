import logging
import warnings

import numpy as np
import pytest

from src.app.main.components.edgmat.entities import ModelConfig
from src.app.main.components.edgmat.exceptions import NoTrainingEdgesError
from src.app.main.components.edgmat.services import (
    EdgmatModel,
    class_weights,
    gradcheck_model,
    jitter_biases,
    parameter_group,
    random_records,
    run_gradcheck,
    train
)
from src.app.main.components.evaluation.services import evaluate_predictions
from src.app.main.components.graph.entities import EdgeMask, InitRule
from src.app.main.components.graph.services import assemble_transductive, build_graph
from src.app.main.components.ingest.entities import SplitSpec
from src.app.main.components.ingest.services import IngestService
from .conftest import random_graph, small_model


def _prepared_graph(synthetic_dataset, seed: int = 0):
    csv_path, schema_path = synthetic_dataset
    service = IngestService()
    prepared = service.prepare(csv_path, service.load_schema(schema_path), 1.0, SplitSpec(train_fraction=0.7, seed=seed))
    return prepared, assemble_transductive(prepared.train, prepared.test, InitRule())


class PTestClassWeights:
    def test_inverse_frequency(self):
        assert np.allclose(class_weights(np.array([0, 0, 0, 1]), 2), [4 / 6, 2.0])

    def test_balanced_classes_weigh_one(self):
        assert np.allclose(class_weights(np.array([0, 1, 2, 2, 1, 0]), 3), 1.0)

    def test_absent_class(self, caplog):
        with caplog.at_level(logging.WARNING):
            weights = class_weights(np.array([0, 0, 2]), 3)

        assert weights[1] == 0.0
        assert np.allclose(weights[[0, 2]], [0.5, 1.0])
        assert "[1]" in caplog.text


class PTestTrain:
    def test_zero_epochs_keeps_initialization(self):
        graph = random_graph(np.random.default_rng(0))
        model = small_model(graph, epochs=0)
        before = [param.data.copy() for param in model.parameters()]

        trace = train(model, graph)

        assert trace.epochs == ()
        assert all(np.array_equal(old, param.data) for old, param in zip(before, model.parameters()))

    def test_needs_train_edges(self):
        graph = build_graph(random_records(np.random.default_rng(0), 2, 2))

        with pytest.raises(NoTrainingEdgesError):
            train(small_model(graph), graph)

    def test_trace_layout(self):
        graph = random_graph(np.random.default_rng(2))
        trace = train(small_model(graph, epochs=5), graph)

        assert [record.epoch for record in trace.epochs] == [1, 2, 3, 4, 5]
        assert all(0.0 <= record.train_accuracy <= 1.0 for record in trace.epochs)

    def test_training_loop_is_warning_free(self):
        graph = random_graph(np.random.default_rng(4))

        with warnings.catch_warnings():
            warnings.simplefilter("error", DeprecationWarning)
            trace = train(small_model(graph, epochs=3), graph)

        assert len(trace.epochs) == 3

    def test_loss_decreases(self, synthetic_dataset):
        _, graph = _prepared_graph(synthetic_dataset)
        model = EdgmatModel(ModelConfig(heads=2, hidden=8, epochs=60, seed=1), graph.node_feature_dim, graph.edge_feature_dim)
        losses = train(model, graph).losses

        assert losses[-1] < losses[0]

    def test_same_seed_same_trace(self):
        graph = random_graph(np.random.default_rng(5), max_nodes=5, max_edges=8)
        first = train(small_model(graph, epochs=15, seed=3), graph)
        second = train(small_model(graph, epochs=15, seed=3), graph)

        assert first.losses == second.losses

    def test_only_train_edges_supervise(self):
        test_only = assemble_transductive([], random_records(np.random.default_rng(7), 3, 2), InitRule())

        with pytest.raises(NoTrainingEdgesError):
            train(small_model(test_only), test_only)

    def test_separable_dataset_converges(self, synthetic_dataset):
        prepared, graph = _prepared_graph(synthetic_dataset)
        config = ModelConfig(layers=2, heads=2, hidden=8, epochs=200, num_classes=2, seed=0)
        model = EdgmatModel(config, graph.node_feature_dim, graph.edge_feature_dim)

        train(model, graph)

        test_edges = graph.edges_with_mask(EdgeMask.TEST)
        predicted = model.predict(graph).classes[test_edges]
        _, report = evaluate_predictions(graph.labels[test_edges], predicted, prepared.dataset_schema.class_names)

        assert report.weighted_f1 >= 0.95


class PTestGradcheck:
    def test_parameter_groups(self):
        assert parameter_group("layer0.head1.W_n") == "layer0.W_n"
        assert parameter_group("layer1.W_s") == "layer1.W_s"
        assert parameter_group("decoder.W") == "decoder.W"

    def test_random_records_cover_classes(self):
        rng = np.random.default_rng(0)

        for _ in range(20):
            records = random_records(rng, 3, 3)
            assert {record.label for record in records} == {0, 1, 2}
            assert len(records) <= 8

    def test_single_graph(self):
        rng = np.random.default_rng(11)
        graph = assemble_transductive(random_records(rng, 3, 2), [], InitRule())
        model = EdgmatModel(ModelConfig(heads=2, hidden=3, seed=4), graph.node_feature_dim, graph.edge_feature_dim)
        jitter_biases(model, rng)

        errors = gradcheck_model(model, graph, dropout_seed=4)

        assert set(errors) == {
            "layer0.W_n", "layer0.W_e", "layer0.a", "layer0.W_s", "layer0.bias",
            "layer1.W_n", "layer1.W_e", "layer1.a", "layer1.W_s", "layer1.bias",
            "decoder.W", "decoder.b"
        }
        assert max(errors.values()) < 1e-4

    def test_twenty_random_graphs(self):
        errors = run_gradcheck(20, seed=0)
        assert max(errors.values()) < 1e-4
