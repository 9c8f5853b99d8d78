from typing import Sequence

import pandas as pd

from src.core.utils.types import FloatArray, IntArray


class CsvEmbeddingRepository:
    """
    `embeddings.csv`: one row per edge,
    `edge_id, true_label, predicted_label, <prefix>0 .. <prefix>{d-1}[, pca_0, pca_1][, mask]`.
    """

    def __init__(self, encoding: str = "utf-8") -> None:
        self._encoding = encoding

    @staticmethod
    def frame(
            edge_ids: IntArray,
            true_labels: IntArray,
            predicted_labels: IntArray,
            embeddings: FloatArray,
            projection: FloatArray | None = None,
            column_prefix: str = "e_final_",
            masks: Sequence[str] | None = None
    ) -> pd.DataFrame:
        frame = pd.DataFrame({
            "edge_id": edge_ids,
            "true_label": true_labels,
            "predicted_label": predicted_labels
        })
        values = pd.DataFrame(embeddings, columns=[f"{column_prefix}{index}" for index in range(embeddings.shape[1])])
        parts = [frame, values]

        if projection is not None:
            parts.append(pd.DataFrame(projection, columns=["pca_0", "pca_1"]))

        if masks is not None:
            parts.append(pd.DataFrame({"mask": list(masks)}))

        return pd.concat(parts, axis=1)

    def save(
            self,
            path: str,
            edge_ids: IntArray,
            true_labels: IntArray,
            predicted_labels: IntArray,
            embeddings: FloatArray,
            projection: FloatArray | None = None,
            column_prefix: str = "e_final_",
            masks: Sequence[str] | None = None
    ) -> None:
        frame = self.frame(edge_ids, true_labels, predicted_labels, embeddings, projection, column_prefix, masks)
        frame.to_csv(
            path, index=False, encoding=self._encoding, lineterminator="\n", float_format="%.9g"
        )
