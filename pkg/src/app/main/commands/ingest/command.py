import logging

from src.app.main.components.graph.repositories import TextGraphDumpRepository
from src.app.main.components.ingest.entities import TopologyMode
from src.app.main.components.ingest.services import IngestService, PreparedDataset, class_histogram
from src.app.main.exceptions.handlers import EXIT_OK
from src.core.utils.collections import format_key_values
from ..pipeline import prepare_dataset, build_topology, ensure_output_dir, write_key_values
from ..router import command_router
from ..schemas import RunConfig, INGEST_SUMMARY_FILE, ENCODED_FILE

_logger = logging.getLogger(__name__)


def ingest_summary(prepared: PreparedDataset) -> dict[str, object]:
    """
    Record counts, feature dimension and per-class histograms before and after sampling.
    """

    names = prepared.dataset_schema.class_names
    summary: dict[str, object] = {
        "records": len(prepared.records),
        "parsed_records": sum(prepared.parsed_histogram.values()),
        "train_records": len(prepared.train),
        "test_records": len(prepared.test),
        "feature_dim": prepared.feature_dim,
        "classes": list(names)
    }

    histograms = {
        "parsed": prepared.parsed_histogram,
        "sampled": prepared.sampled_histogram,
        "train": class_histogram(prepared.train),
        "test": class_histogram(prepared.test)
    }

    for prefix, histogram in histograms.items():
        for label, name in enumerate(names):
            summary[f"{prefix}.{name}"] = histogram.get(label, 0)

    return summary


@command_router.command("ingest")
def cmd_ingest(config: RunConfig) -> int:
    service = IngestService()
    prepared = prepare_dataset(config, service)
    summary = ingest_summary(prepared)
    out = ensure_output_dir(config)

    with command_router.stage("export", out):
        write_key_values(config.output_path(INGEST_SUMMARY_FILE), summary)

        if config.dump_encoded:
            service.write_encoded(prepared.records, prepared.dataset_schema, config.output_path(ENCODED_FILE))

    if config.dump_graph:
        topology = build_topology(config, prepared)
        dump = TextGraphDumpRepository()

        with command_router.stage("export", out):
            if config.mode is TopologyMode.INDUCTIVE:
                dump.save(topology.train_graph, config.output_path("graph_train.txt"))
                dump.save(topology.eval_graph, config.output_path("graph_test.txt"))
            else:
                dump.save(topology.eval_graph, config.output_path("graph.txt"))

    print(format_key_values(summary), end="")
    _logger.info(f"Ingest summary written to {config.output_path(INGEST_SUMMARY_FILE)}")
    return EXIT_OK
