import logging

import numpy as np

from src.app.main.components.evaluation.repositories import CsvEmbeddingRepository
from src.app.main.components.evaluation.services import pca2
from src.app.main.components.graph.entities import MASKS_BY_CODE
from src.app.main.exceptions.handlers import EXIT_OK
from ..evaluate.command import load_model
from ..pipeline import prepare_dataset, build_topology, ensure_output_dir
from ..router import command_router
from ..schemas import RunConfig, EMBEDDINGS_FILE

_logger = logging.getLogger(__name__)


@command_router.command("export-embeddings")
def cmd_export_embeddings(config: RunConfig) -> int:
    """
    Writes every edge of the evaluation graph with either its final edge embedding or its
    encoded input features, optionally followed by 2-D PCA coordinates fitted on all rows.
    The `mask` column tells train edges from test edges.
    """

    prepared = prepare_dataset(config)
    model = load_model(config, prepared)
    topology = build_topology(config, prepared)
    graph = topology.eval_graph
    edges = np.arange(graph.num_edges)

    with command_router.stage("export", config.checkpoint_path):
        output = model.forward(graph, training=False)
        predicted = output.logits.data.argmax(axis=1)

        if config.embedding_source == "input":
            matrix, prefix = graph.edge_features, "e_input_"
        else:
            matrix, prefix = output.edge_embeddings.data, "e_final_"

        projection = pca2(matrix, seed=config.seed).coordinates if config.projection == "pca2" else None

    out = ensure_output_dir(config)

    with command_router.stage("export", out):
        CsvEmbeddingRepository().save(
            config.output_path(EMBEDDINGS_FILE),
            edges,
            graph.labels,
            predicted,
            matrix,
            projection=projection,
            column_prefix=prefix,
            masks=[MASKS_BY_CODE[int(code)].value for code in graph.mask_codes]
        )

    _logger.info(f"Exported {edges.size} edge embeddings of width {matrix.shape[1]} to {config.output_path(EMBEDDINGS_FILE)}")
    return EXIT_OK
