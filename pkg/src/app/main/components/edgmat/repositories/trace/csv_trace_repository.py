import pandas as pd

from src.app.main.components.edgmat.entities import TrainingTrace, EpochRecord

TRACE_COLUMNS = ["epoch", "loss", "train_accuracy"]


class CsvTraceRepository:
    """
    `loss_trace.csv`: one row per epoch with columns epoch, loss, train_accuracy.
    """

    def __init__(self, encoding: str = "utf-8") -> None:
        self._encoding = encoding

    def save(self, trace: TrainingTrace, path: str) -> None:
        frame = pd.DataFrame([record.model_dump() for record in trace.epochs], columns=TRACE_COLUMNS)
        frame.to_csv(path, index=False, encoding=self._encoding, lineterminator="\n", float_format="%.12g")

    def load(self, path: str) -> TrainingTrace:
        frame = pd.read_csv(path, encoding=self._encoding)
        return TrainingTrace(epochs=tuple(
            EpochRecord(epoch=int(row.epoch), loss=float(row.loss), train_accuracy=float(row.train_accuracy))
            for row in frame.itertuples(index=False)
        ))
