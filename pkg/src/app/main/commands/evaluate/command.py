import logging

from src.app.main.components.edgmat.exceptions import DimensionMismatchError
from src.app.main.components.edgmat.repositories import BinaryCheckpointRepository
from src.app.main.components.edgmat.services import EdgmatModel
from src.app.main.components.evaluation.entities import EvaluationSummary
from src.app.main.components.evaluation.repositories import ReportRepository
from src.app.main.components.evaluation.services import summarize
from src.app.main.components.graph.entities import EdgeMask
from src.app.main.components.ingest.services import PreparedDataset
from src.app.main.exceptions.handlers import EXIT_OK
from ..pipeline import Topology, prepare_dataset, build_topology, ensure_output_dir
from ..router import command_router
from ..schemas import RunConfig, REPORT_TABLE_FILE, REPORT_KEY_VALUES_FILE

_logger = logging.getLogger(__name__)


def load_model(config: RunConfig, prepared: PreparedDataset) -> EdgmatModel:
    with command_router.stage("evaluate", config.checkpoint_path):
        model = BinaryCheckpointRepository().load(config.checkpoint_path)
        num_classes = prepared.dataset_schema.num_classes

        if model.config.num_classes != num_classes:
            raise DimensionMismatchError("number of classes", model.config.num_classes, num_classes)

        return model


def evaluate_model(model: EdgmatModel, topology: Topology, prepared: PreparedDataset, config: RunConfig) -> EvaluationSummary:
    """
    Metrics over the test-masked edges of the evaluation graph, next to the majority-class baseline.
    """

    graph = topology.eval_graph
    test_edges = graph.edges_with_mask(EdgeMask.TEST)
    predictions = model.predict(graph)

    train_graph = topology.train_graph
    train_labels = train_graph.labels[train_graph.edges_with_mask(EdgeMask.TRAIN)]

    return summarize(
        graph.labels[test_edges],
        predictions.classes[test_edges],
        train_labels,
        prepared.dataset_schema.class_names,
        config.mode.value
    )


@command_router.command("evaluate")
def cmd_evaluate(config: RunConfig) -> int:
    prepared = prepare_dataset(config)
    model = load_model(config, prepared)
    topology = build_topology(config, prepared)

    with command_router.stage("evaluate", config.checkpoint_path):
        summary = evaluate_model(model, topology, prepared, config)

    out = ensure_output_dir(config)
    repository = ReportRepository()

    with command_router.stage("export", out):
        repository.save(summary, config.output_path(REPORT_TABLE_FILE), config.output_path(REPORT_KEY_VALUES_FILE))

    print(repository.render_table(summary), end="")
    return EXIT_OK
