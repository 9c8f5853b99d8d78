"""
Stages shared by the commands: dataset preparation and topology assembly.
"""

import logging
import os
from dataclasses import dataclass

from src.app.main.components.graph.entities import FlowGraph
from src.app.main.components.graph.services import assemble_transductive, assemble_inductive
from src.app.main.components.ingest.entities import TopologyMode
from src.app.main.components.ingest.services import IngestService, PreparedDataset
from src.core.exceptions import ConfigurationError
from src.core.utils.collections import format_key_values
from .router import command_router
from .schemas import RunConfig

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Topology:
    """
    Graphs of one run. Transductive: `train_graph is eval_graph`, one graph with both masks.
    Inductive: two independent graphs.
    """

    train_graph: FlowGraph
    eval_graph: FlowGraph


def require_inputs(config: RunConfig) -> tuple[str, str]:
    if config.dataset is None:
        raise ConfigurationError("no dataset given (set 'dataset' in the config file or pass --dataset)")

    if config.schema_path is None:
        raise ConfigurationError("no dataset schema given (set 'schema' in the config file or pass --schema)")

    return config.dataset, config.schema_path


def prepare_dataset(config: RunConfig, service: IngestService | None = None) -> PreparedDataset:
    dataset_path, schema_path = require_inputs(config)
    service = service or IngestService()

    with command_router.stage("ingest", schema_path):
        schema = service.load_schema(schema_path)

    with command_router.stage("ingest", dataset_path):
        prepared = service.prepare(dataset_path, schema, config.sample_fraction, config.split)

    _logger.info(f"Prepared {len(prepared.train)} train / {len(prepared.test)} test flows, feature dimension {prepared.feature_dim}")
    return prepared


def build_topology(config: RunConfig, prepared: PreparedDataset) -> Topology:
    with command_router.stage("graph", config.dataset):
        if config.mode is TopologyMode.INDUCTIVE:
            train_graph, test_graph = assemble_inductive(prepared.train, prepared.test, config.init_rule)
            return Topology(train_graph=train_graph, eval_graph=test_graph)

        graph = assemble_transductive(prepared.train, prepared.test, config.init_rule)
        return Topology(train_graph=graph, eval_graph=graph)


def ensure_output_dir(config: RunConfig) -> str:
    os.makedirs(config.out, exist_ok=True)
    return config.out


def write_key_values(path: str, values: dict[str, object], encoding: str = "utf-8") -> None:
    with open(path, "w", encoding=encoding) as file:
        file.write(format_key_values(values))
