import logging
import time
from datetime import datetime, timezone

from src.app.main.components.edgmat.repositories import BinaryCheckpointRepository, CsvTraceRepository
from src.app.main.components.edgmat.services import EdgmatModel, train
from src.app.main.components.graph.entities import EdgeMask
from src.app.main.exceptions.handlers import EXIT_OK
from ..pipeline import prepare_dataset, build_topology, ensure_output_dir, write_key_values
from ..router import command_router
from ..schemas import RunConfig, LOSS_TRACE_FILE, RUN_META_FILE

_logger = logging.getLogger(__name__)


@command_router.command("train")
def cmd_train(config: RunConfig) -> int:
    started_at = datetime.now(timezone.utc)
    started = time.perf_counter()

    prepared = prepare_dataset(config)
    topology = build_topology(config, prepared)
    graph = topology.train_graph

    with command_router.stage("train", config.dataset):
        model = EdgmatModel(
            config.to_model_config(prepared.dataset_schema.num_classes),
            graph.node_feature_dim,
            graph.edge_feature_dim
        )
        trace = train(model, graph, log_every=config.loss_log_every)

    out = ensure_output_dir(config)

    with command_router.stage("export", out):
        BinaryCheckpointRepository().save(model, config.checkpoint_path)
        CsvTraceRepository().save(trace, config.output_path(LOSS_TRACE_FILE))

        write_key_values(config.output_path(RUN_META_FILE), {
            "command": "train",
            "seed": config.seed,
            "started_at": started_at.isoformat(timespec="seconds"),
            "wall_time_seconds": round(time.perf_counter() - started, 3),
            "nodes": graph.num_nodes,
            "train_edges": int(graph.edges_with_mask(EdgeMask.TRAIN).size),
            "test_edges": int(topology.eval_graph.edges_with_mask(EdgeMask.TEST).size),
            "parameters": sum(param.data.size for param in model.parameters()),
            "final_loss": trace.losses[-1] if trace.epochs else None,
            **config.echo()
        })

    _logger.info(f"Training finished; outputs in {out}")
    return EXIT_OK
