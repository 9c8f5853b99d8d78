import json
import os

import pytest
from pydantic import ValidationError

from args import overrides, parse_args
from settings_setup import setup_settings
from src.app.main.commands import RunConfig
from src.app.main.components.graph.entities import NodeInitKind
from src.app.main.components.ingest.entities import TopologyMode
from src.core.state import ConfigSourceError, KeyValueFileConfig, MappingConfig, ProjectSettings, PyModuleConfig, parse_key_values
from src.core.state.config import normalize_key


def _write(tmp_path, name: str, text: str) -> str:
    path = os.path.join(tmp_path, name)

    with open(path, "w", encoding="utf-8") as file:
        file.write(text)

    return path


class PTestKeyValues:
    def test_parse(self):
        lines = ["# comment", "", "Sample-Fraction = 0.5", "out = runs/a = b"]
        assert parse_key_values(lines, "test") == {"SAMPLE_FRACTION": "0.5", "OUT": "runs/a = b"}

    def test_keys_kept_verbatim(self):
        assert parse_key_values(["categorical.PROTOCOL = 6, 17"], "test", normalize_keys=False) == {"categorical.PROTOCOL": "6, 17"}

    def test_line_without_separator(self):
        with pytest.raises(ConfigSourceError, match="line 2"):
            parse_key_values(["a = 1", "oops"], "run.kv")

    @pytest.mark.parametrize("raw", ["sample-fraction", "sample_fraction", "SAMPLE_FRACTION", " sample fraction "])
    def test_normalize_key(self, raw):
        assert normalize_key(raw) == "SAMPLE_FRACTION"


class PTestProjectSettings:
    def test_later_sources_win(self, tmp_path):
        settings = ProjectSettings()
        settings.register_config(PyModuleConfig("src.config"))
        settings.register_config(KeyValueFileConfig(_write(tmp_path, "run.kv", "heads = 2\nepochs = 7\n")))
        settings.register_config(MappingConfig({"epochs": 9, "seed": None}))

        assert settings.heads == "2"
        assert settings.epochs == 9
        assert settings.seed == 0
        assert settings.sources == ("PyModuleConfig", "KeyValueFileConfig", "MappingConfig")

    def test_missing_key(self):
        with pytest.raises(AttributeError):
            ProjectSettings().heads

    def test_extract_skips_missing(self):
        settings = ProjectSettings()
        settings.register_config(MappingConfig({"heads": 3}))

        assert settings.extract(["heads", "hidden"]) == {"heads": 3}


class PTestRunConfig:
    def test_defaults(self):
        config = RunConfig()

        assert config.mode is TopologyMode.TRANSDUCTIVE
        assert (config.layers, config.heads, config.hidden) == (2, 4, 32)
        assert (config.dropout, config.lr) == (0.2, 0.01)

    def test_from_key_value_file_and_flags(self, tmp_path):
        config_path = _write(tmp_path, "run.kv", (
            "dataset = flows.csv\nschema = flows.schema\nmode = Inductive\nheads = 2\n"
            "node_init = constant\nnode_init_value = 0.5\ndump_graph = true\n"
        ))
        cmd_args = parse_args(["train", "--config", config_path, "--heads", "3", "--out", str(tmp_path)])
        config = RunConfig.from_settings(setup_settings(cmd_args))

        assert config.dataset == "flows.csv"
        assert config.schema_path == "flows.schema"
        assert config.mode is TopologyMode.INDUCTIVE
        assert config.heads == 3
        assert config.dump_graph is True
        assert config.init_rule.kind is NodeInitKind.CONSTANT
        assert config.init_rule.fill_value() == 0.5
        assert config.checkpoint_path == os.path.join(str(tmp_path), "checkpoint")

    def test_from_json_file(self, tmp_path):
        config_path = _write(tmp_path, "run.json", json.dumps({"sample-fraction": 0.25, "epochs": 3, "projection": "none"}))
        config = RunConfig.from_settings(setup_settings(parse_args(["export-embeddings", "--config", config_path])))

        assert config.sample_fraction == 0.25
        assert config.epochs == 3
        assert config.projection == "none"

    def test_unset_flags_do_not_mask_file(self, tmp_path):
        config_path = _write(tmp_path, "run.kv", "dump_encoded = true\n")
        cmd_args = parse_args(["ingest", "--config", config_path])

        assert "dump_encoded" not in overrides(cmd_args)
        assert RunConfig.from_settings(setup_settings(cmd_args)).dump_encoded is True

    @pytest.mark.parametrize("field, value", [
        ("sample_fraction", 0.0),
        ("sample_fraction", 1.5),
        ("train_fraction", 1.0),
        ("dropout", 1.0),
        ("heads", 0),
        ("mode", "semi")
    ])
    def test_invalid_values(self, field, value):
        with pytest.raises(ValidationError):
            RunConfig.model_validate({field: value})

    def test_model_config(self):
        model_config = RunConfig(heads=2, hidden=8, epochs=5, seed=4).to_model_config(num_classes=5)

        assert (model_config.heads, model_config.hidden, model_config.epochs) == (2, 8, 5)
        assert (model_config.num_classes, model_config.seed) == (5, 4)
        assert model_config.edge_embedding_dim == 32

    def test_echo(self):
        echo = RunConfig(dataset="flows.csv", schema="flows.schema").echo()

        assert echo["config.dataset"] == "flows.csv"
        assert echo["config.schema"] == "flows.schema"
        assert echo["config.mode"] == "transductive"


class PTestArgs:
    def test_overrides_exclude_bookkeeping(self):
        cmd_args = parse_args(["--log-file", "x.log", "train", "--config", "run.kv", "--epochs", "4", "--train-fraction", "0.8"])
        assert overrides(cmd_args) == {"epochs": 4, "train_fraction": 0.8}

    def test_command_required(self):
        with pytest.raises(SystemExit):
            parse_args([])

    def test_gradcheck_flag(self):
        assert overrides(parse_args(["gradcheck", "--gradcheck-graphs", "3"])) == {"gradcheck_graphs": 3}
