import logging
import os

import pandas as pd
import pytest

from run import main
from src.app.main.commands.schemas import (
    CHECKPOINT_FILE,
    EMBEDDINGS_FILE,
    GRADCHECK_FILE,
    INGEST_SUMMARY_FILE,
    LOSS_TRACE_FILE,
    REPORT_KEY_VALUES_FILE,
    REPORT_TABLE_FILE,
    RUN_META_FILE
)
from src.app.main.components.ingest.services import class_quota
from src.core.state import parse_key_values

MODEL_FLAGS = ["--heads", "2", "--hidden", "4", "--epochs", "8", "--seed", "3"]


def _read(path: str, mode: str = "r"):
    with open(path, mode, **({} if "b" in mode else {"encoding": "utf-8"})) as file:
        return file.read()


def _key_values(path: str) -> dict[str, str]:
    return parse_key_values(_read(path).splitlines(), path, normalize_keys=False)


@pytest.fixture
def run_args(synthetic_dataset, tmp_path):
    csv_path, schema_path = synthetic_dataset

    def build(command: str, out: str = "out", *extra: str) -> list[str]:
        return [command, "--dataset", csv_path, "--schema", schema_path, "--out", os.path.join(tmp_path, out), *extra]

    return build


class PTestIngestCommand:
    def test_summary(self, run_args, tmp_path, capsys):
        assert main(run_args("ingest")) == 0

        summary = _key_values(os.path.join(tmp_path, "out", INGEST_SUMMARY_FILE))
        assert summary["records"] == "400"
        assert summary["feature_dim"] == "5"
        assert summary["classes"] == "Benign, Attack"
        assert int(summary["train_records"]) + int(summary["test_records"]) == 400
        assert "records = 400" in capsys.readouterr().out

    def test_sample_fraction(self, run_args, tmp_path):
        assert main(run_args("ingest", "out", "--sample-fraction", "0.1")) == 0
        summary = _key_values(os.path.join(tmp_path, "out", INGEST_SUMMARY_FILE))

        for name in ("Benign", "Attack"):
            parsed = int(summary[f"parsed.{name}"])
            assert int(summary[f"sampled.{name}"]) == class_quota(0.1, parsed)

    def test_dumps(self, run_args, tmp_path):
        assert main(run_args("ingest", "out", "--dump-graph", "--dump-encoded")) == 0
        out = os.path.join(tmp_path, "out")

        assert _read(os.path.join(out, "graph.txt")).startswith("node\t0\t")
        assert len(pd.read_csv(os.path.join(out, "encoded.csv"))) == 400

    def test_inductive_dumps_two_graphs(self, run_args, tmp_path):
        assert main(run_args("ingest", "out", "--mode", "inductive", "--dump-graph")) == 0

        for name in ("graph_train.txt", "graph_test.txt"):
            assert os.path.isfile(os.path.join(tmp_path, "out", name))

    def test_missing_dataset_file(self, schema_file, tmp_path, caplog):
        missing = os.path.join(tmp_path, "absent.csv")

        with caplog.at_level(logging.ERROR):
            status = main(["ingest", "--dataset", missing, "--schema", schema_file, "--out", str(tmp_path)])

        assert status == 2
        assert missing in caplog.text
        assert "stage ingest" in caplog.text

    def test_dataset_not_configured(self, schema_file, tmp_path):
        assert main(["ingest", "--schema", schema_file, "--out", str(tmp_path)]) == 2

    def test_invalid_setting(self, run_args):
        assert main(run_args("ingest", "out", "--sample-fraction", "1.5")) == 2

    def test_unknown_label_fails(self, flows_csv, schema_file, tmp_path, caplog):
        row = {
            "src_ip": "1.1.1.1", "src_port": 1, "dst_ip": "2.2.2.2", "dst_port": 2,
            "bytes": 1, "duration": 1, "proto": "tcp", "label": "Worm"
        }

        with caplog.at_level(logging.ERROR):
            status = main(["ingest", "--dataset", flows_csv([row]), "--schema", schema_file, "--out", str(tmp_path)])

        assert status == 1
        assert "Worm" in caplog.text


class PTestTrainEvaluate:
    def test_train_outputs(self, run_args, tmp_path):
        assert main(run_args("train", "out", *MODEL_FLAGS)) == 0
        out = os.path.join(tmp_path, "out")

        assert _read(os.path.join(out, CHECKPOINT_FILE), "rb").startswith(b"EDGMAT1")

        trace = pd.read_csv(os.path.join(out, LOSS_TRACE_FILE))
        assert list(trace.columns) == ["epoch", "loss", "train_accuracy"]
        assert trace["epoch"].tolist() == list(range(1, 9))

        meta = _key_values(os.path.join(out, RUN_META_FILE))
        assert meta["seed"] == "3"
        assert meta["config.heads"] == "2"
        assert "wall_time_seconds" in meta

    def test_evaluate_report(self, run_args, tmp_path, capsys):
        assert main(run_args("train", "out", *MODEL_FLAGS)) == 0
        checkpoint = _read(os.path.join(tmp_path, "out", CHECKPOINT_FILE), "rb")

        assert main(run_args("evaluate", "out", *MODEL_FLAGS)) == 0
        out = os.path.join(tmp_path, "out")
        table = _read(os.path.join(out, REPORT_TABLE_FILE))

        for row in ("Benign", "Attack", "Weighted Average", "Majority-class baseline"):
            assert row in table

        report = _key_values(os.path.join(out, REPORT_KEY_VALUES_FILE))
        assert report["mode"] == "transductive"
        assert 0.0 <= float(report["weighted.f1"]) <= 1.0
        assert float(report["weighted.recall"]) == pytest.approx(
            sum(int(value.split(", ")[index]) for index, value in enumerate(
                [report["confusion.Benign"], report["confusion.Attack"]]
            )) / int(report["num_edges"])
        )
        assert _read(os.path.join(out, CHECKPOINT_FILE), "rb") == checkpoint
        assert "Weighted Average" in capsys.readouterr().out

    def test_same_seed_same_outputs(self, run_args, tmp_path):
        for out in ("first", "second"):
            assert main(run_args("train", out, *MODEL_FLAGS)) == 0
            assert main(run_args("evaluate", out, *MODEL_FLAGS)) == 0

        for name in (LOSS_TRACE_FILE, REPORT_TABLE_FILE, REPORT_KEY_VALUES_FILE, CHECKPOINT_FILE):
            assert _read(os.path.join(tmp_path, "first", name), "rb") == _read(os.path.join(tmp_path, "second", name), "rb")

    def test_inductive_run(self, run_args, tmp_path):
        assert main(run_args("train", "out", "--mode", "inductive", *MODEL_FLAGS)) == 0
        assert main(run_args("evaluate", "out", "--mode", "inductive", *MODEL_FLAGS)) == 0

        report = _key_values(os.path.join(tmp_path, "out", REPORT_KEY_VALUES_FILE))
        assert report["mode"] == "inductive"

    def test_evaluate_without_checkpoint(self, run_args):
        assert main(run_args("evaluate", "empty")) == 2

    def test_class_count_mismatch(self, run_args, synthetic_dataset, tmp_path, caplog):
        assert main(run_args("train", "out", *MODEL_FLAGS)) == 0

        three_classes = os.path.join(tmp_path, "three.schema")
        with open(synthetic_dataset[1], encoding="utf-8") as source, open(three_classes, "w", encoding="utf-8") as target:
            target.write(source.read().replace("class_names = Benign, Attack", "class_names = Benign, Attack, Theft"))

        arguments = run_args("evaluate", "out", *MODEL_FLAGS)
        arguments[arguments.index("--schema") + 1] = three_classes

        with caplog.at_level(logging.ERROR):
            assert main(arguments) == 1

        assert "stage evaluate" in caplog.text
        assert "number of classes" in caplog.text


class PTestExportEmbeddings:
    @pytest.fixture
    def trained_out(self, run_args, tmp_path):
        assert main(run_args("train", "out", *MODEL_FLAGS)) == 0
        return os.path.join(tmp_path, "out")

    def test_every_edge_is_exported(self, run_args, trained_out):
        assert main(run_args("export-embeddings", "out", "--projection", "none", *MODEL_FLAGS)) == 0
        frame = pd.read_csv(os.path.join(trained_out, EMBEDDINGS_FILE))
        meta = _key_values(os.path.join(trained_out, RUN_META_FILE))

        assert len(frame) == 400
        assert frame["edge_id"].tolist() == list(range(400))
        assert (frame["mask"] == "train").sum() == int(meta["train_edges"])
        assert (frame["mask"] == "test").sum() == int(meta["test_edges"])

    def test_raw_width(self, run_args, trained_out):
        assert main(run_args("export-embeddings", "out", "--projection", "none", *MODEL_FLAGS)) == 0
        frame = pd.read_csv(os.path.join(trained_out, EMBEDDINGS_FILE))

        assert list(frame.columns[:3]) == ["edge_id", "true_label", "predicted_label"]
        assert frame.shape[1] == 3 + 2 * 2 * 4 + 1
        assert list(frame.columns[-2:]) == ["e_final_15", "mask"]

    def test_pca_columns(self, run_args, trained_out):
        assert main(run_args("export-embeddings", "out", "--projection", "pca2", *MODEL_FLAGS)) == 0
        frame = pd.read_csv(os.path.join(trained_out, EMBEDDINGS_FILE))

        assert list(frame.columns[-3:]) == ["pca_0", "pca_1", "mask"]
        assert frame.shape[1] == 3 + 16 + 2 + 1
        assert frame["pca_0"].var() >= frame["pca_1"].var()

    def test_input_features(self, run_args, trained_out):
        assert main(run_args("export-embeddings", "out", "--embedding-source", "input", "--projection", "none", *MODEL_FLAGS)) == 0
        frame = pd.read_csv(os.path.join(trained_out, EMBEDDINGS_FILE))

        assert [column for column in frame.columns if column.startswith("e_input_")] == [f"e_input_{index}" for index in range(5)]

    def test_inductive_exports_test_graph(self, run_args, tmp_path):
        assert main(run_args("train", "out", "--mode", "inductive", *MODEL_FLAGS)) == 0
        assert main(run_args("export-embeddings", "out", "--mode", "inductive", "--projection", "none", *MODEL_FLAGS)) == 0

        out = os.path.join(tmp_path, "out")
        frame = pd.read_csv(os.path.join(out, EMBEDDINGS_FILE))

        assert len(frame) == int(_key_values(os.path.join(out, RUN_META_FILE))["test_edges"])
        assert set(frame["mask"]) == {"test"}


class PTestGradcheckCommand:
    def test_passes(self, tmp_path):
        assert main(["gradcheck", "--gradcheck-graphs", "3", "--out", str(tmp_path)]) == 0

        result = _key_values(os.path.join(tmp_path, GRADCHECK_FILE))
        assert result["passed"] == "True"
        assert float(result["max_error"]) < 1e-4
        assert "error.decoder.W" in result
