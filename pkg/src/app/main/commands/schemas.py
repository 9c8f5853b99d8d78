import os
from typing import Literal

from pydantic import ConfigDict, Field, field_validator

from src.app.bases.schemas import BaseSchema
from src.app.main.components.edgmat.entities import ModelConfig
from src.app.main.components.graph.entities import InitRule, NodeInitKind
from src.app.main.components.ingest.entities import SplitSpec, TopologyMode
from src.core.state import ProjectSettings

CHECKPOINT_FILE = "checkpoint"
LOSS_TRACE_FILE = "loss_trace.csv"
REPORT_TABLE_FILE = "report.txt"
REPORT_KEY_VALUES_FILE = "report.kv"
EMBEDDINGS_FILE = "embeddings.csv"
RUN_META_FILE = "run_meta.kv"
INGEST_SUMMARY_FILE = "ingest_summary.kv"
ENCODED_FILE = "encoded.csv"
GRADCHECK_FILE = "gradcheck.kv"


class RunConfig(BaseSchema):
    """
    Validated settings of one CLI run: module defaults, overridden by the `--config` file,
    overridden by explicit flags.
    """

    model_config = ConfigDict(populate_by_name=True)

    dataset: str | None = None
    schema_path: str | None = Field(default=None, alias="schema")
    mode: TopologyMode = TopologyMode.TRANSDUCTIVE
    sample_fraction: float = Field(default=1.0, gt=0, le=1)
    train_fraction: float = Field(default=0.7, gt=0, lt=1)
    out: str = os.path.join("runs", "latest")
    checkpoint: str | None = None
    seed: int = 0

    node_init: NodeInitKind = NodeInitKind.ONES
    node_init_value: float = 1.0

    layers: int = Field(default=2, ge=1)
    heads: int = Field(default=4, ge=1)
    hidden: int = Field(default=32, ge=1)
    dropout: float = Field(default=0.2, ge=0, lt=1)
    lr: float = Field(default=0.01, ge=0)
    epochs: int = Field(default=150, ge=0)
    leaky_slope: float = Field(default=0.2, ge=0)
    adam_beta1: float = Field(default=0.9, ge=0, lt=1)
    adam_beta2: float = Field(default=0.999, ge=0, lt=1)
    adam_eps: float = Field(default=1e-8, gt=0)
    loss_log_every: int = Field(default=10, ge=0)

    projection: Literal["none", "pca2"] = "pca2"
    embedding_source: Literal["final", "input"] = "final"
    dump_graph: bool = False
    dump_encoded: bool = False

    gradcheck_graphs: int = Field(default=20, ge=1)
    gradcheck_tolerance: float = Field(default=1e-4, gt=0)

    @field_validator("mode", "node_init", "projection", "embedding_source", mode="before")
    @classmethod
    def _lower_case_choice(cls, value: object) -> object:
        return value.strip().lower() if isinstance(value, str) else value

    @classmethod
    def from_settings(cls, settings: ProjectSettings) -> 'RunConfig':
        keys = [field.alias or name for name, field in cls.model_fields.items()]
        return cls.model_validate(settings.extract(keys))

    @property
    def split(self) -> SplitSpec:
        return SplitSpec(mode=self.mode, train_fraction=self.train_fraction, seed=self.seed)

    @property
    def init_rule(self) -> InitRule:
        return InitRule(kind=self.node_init, value=self.node_init_value)

    @property
    def checkpoint_path(self) -> str:
        return self.checkpoint if self.checkpoint is not None else self.output_path(CHECKPOINT_FILE)

    def to_model_config(self, num_classes: int) -> ModelConfig:
        return ModelConfig(
            layers=self.layers,
            heads=self.heads,
            hidden=self.hidden,
            dropout=self.dropout,
            lr=self.lr,
            epochs=self.epochs,
            leaky_slope=self.leaky_slope,
            num_classes=num_classes,
            seed=self.seed,
            adam_beta1=self.adam_beta1,
            adam_beta2=self.adam_beta2,
            adam_eps=self.adam_eps
        )

    def output_path(self, name: str) -> str:
        return os.path.join(self.out, name)

    def echo(self) -> dict[str, object]:
        """
        Flat `config.<field>` mapping for run metadata.
        """

        return {f"config.{key}": value for key, value in self.model_dump(mode="json", by_alias=True).items()}
