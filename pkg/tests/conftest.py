import os
from typing import Callable, Sequence

import numpy as np
import pandas as pd
import pytest

from src.app.main.components.edgmat.entities import ModelConfig
from src.app.main.components.edgmat.services import EdgmatModel
from src.app.main.components.graph.entities import FlowGraph, InitRule
from src.app.main.components.graph.services import assemble_transductive
from src.app.main.components.ingest.entities import DatasetSchema, CategoricalColumn, FlowRecord

SCHEMA_TEXT = """\
# test schema
identifier_columns = src_ip, src_port, dst_ip, dst_port
label_column = label
class_names = Benign, Attack
numeric_columns = bytes, duration
categorical.proto = tcp, udp
"""

CSV_COLUMNS = ["src_ip", "src_port", "dst_ip", "dst_port", "bytes", "duration", "proto", "label"]


def make_record(
        src: tuple[str, int],
        dst: tuple[str, int],
        features: Sequence[float] = (0.0,),
        label: int = 0,
        row_index: int = 0
) -> FlowRecord:
    return FlowRecord(
        src_ip=src[0],
        src_port=src[1],
        dst_ip=dst[0],
        dst_port=dst[1],
        features=tuple(features),
        label=label,
        row_index=row_index
    )


def random_flow_records(
        rng: np.random.Generator,
        num_records: int,
        num_sockets: int,
        feature_dim: int,
        num_classes: int = 2
) -> list[FlowRecord]:
    sockets = [(f"10.0.{index // 250}.{index % 250 + 1}", 1024 + index) for index in range(num_sockets)]
    records = []

    for row in range(num_records):
        src, dst = rng.integers(0, num_sockets, size=2)
        records.append(make_record(
            sockets[int(src)],
            sockets[int(dst)],
            rng.standard_normal(feature_dim).tolist(),
            label=int(rng.integers(0, num_classes)),
            row_index=row
        ))

    return records


def random_graph(
        rng: np.random.Generator,
        max_nodes: int = 5,
        max_edges: int = 8,
        feature_dim: int = 3,
        num_classes: int = 2
) -> FlowGraph:
    num_sockets = int(rng.integers(1, max_nodes + 1))
    num_edges = int(rng.integers(1, max_edges + 1))
    records = random_flow_records(rng, num_edges, num_sockets, feature_dim, num_classes)
    return assemble_transductive(records, [], InitRule())


def small_model(graph: FlowGraph, heads: int = 2, hidden: int = 3, num_classes: int = 2, seed: int = 0, **overrides) -> EdgmatModel:
    config = ModelConfig(heads=heads, hidden=hidden, num_classes=num_classes, seed=seed, **overrides)
    return EdgmatModel(config, graph.node_feature_dim, graph.edge_feature_dim)


def write_flows_csv(path: str, rows: Sequence[dict]) -> str:
    pd.DataFrame(list(rows), columns=CSV_COLUMNS).to_csv(path, index=False)
    return path


def synthetic_threshold_rows(
        num_flows: int = 400,
        num_sockets: int = 20,
        noise: float = 0.02,
        seed: int = 7
) -> list[dict]:
    """
    Two-class flows between `num_sockets` sockets; a flow is an attack when its byte
    score plus a little noise is positive. Duration and protocol carry no signal.
    """

    rng = np.random.default_rng(seed)
    sockets = [(f"192.168.0.{index + 1}", 2000 + index) for index in range(num_sockets)]
    rows = []

    for _ in range(num_flows):
        src, dst = rng.integers(0, num_sockets, size=2)
        score = float(rng.uniform(-1.0, 1.0))
        rows.append({
            "src_ip": sockets[src][0],
            "src_port": sockets[src][1],
            "dst_ip": sockets[dst][0],
            "dst_port": sockets[dst][1],
            "bytes": 1000.0 + 500.0 * score,
            "duration": float(rng.uniform(0.0, 10.0)),
            "proto": str(rng.choice(["tcp", "udp"])),
            "label": "Attack" if score + noise * rng.standard_normal() > 0 else "Benign"
        })

    return rows


@pytest.fixture
def dataset_schema() -> DatasetSchema:
    return DatasetSchema(
        identifier_columns=("src_ip", "src_port", "dst_ip", "dst_port"),
        label_column="label",
        class_names=("Benign", "Attack"),
        numeric_columns=("bytes", "duration"),
        categorical_columns=(CategoricalColumn(name="proto", vocabulary=("tcp", "udp")),)
    )


@pytest.fixture
def schema_file(tmp_path) -> str:
    path = os.path.join(tmp_path, "flows.schema")

    with open(path, "w", encoding="utf-8") as file:
        file.write(SCHEMA_TEXT)

    return path


@pytest.fixture
def flows_csv(tmp_path) -> Callable[[Sequence[dict]], str]:
    def writer(rows: Sequence[dict], name: str = "flows.csv") -> str:
        return write_flows_csv(os.path.join(tmp_path, name), rows)

    return writer


@pytest.fixture
def synthetic_dataset(tmp_path, schema_file) -> tuple[str, str]:
    return write_flows_csv(os.path.join(tmp_path, "synthetic.csv"), synthetic_threshold_rows()), schema_file
