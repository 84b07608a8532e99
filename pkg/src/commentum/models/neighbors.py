"""k-nearest-neighbors over stored training vectors (Euclidean distance)."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..features import FeatureVector, Vocabulary
from .base import TrainedModel, register, to_dense


@register
class KnnModel(TrainedModel):
    algorithm = "knn"
    boundary = ">"  # vote ties fall to Not Useful

    def __init__(self, train_X: np.ndarray, train_y: np.ndarray, k: int,
                 vocab_digest: str, train_config: dict | None = None):
        super().__init__(vocab_digest, train_X.shape[1], train_config or {"k": k})
        self.train_X = np.asarray(train_X, dtype=float)
        self.train_y = np.asarray(train_y, dtype=int)
        self.k = k

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        diffs = X[:, None, :] - self.train_X[None, :, :]
        dists = np.sqrt(np.sum(diffs * diffs, axis=2))
        scores = np.empty(len(X))
        for i, row in enumerate(dists):
            # stable sort: equidistant neighbors resolve by training index
            nearest = np.argsort(row, kind="stable")[: self.k]
            votes = self.train_y[nearest]
            scores[i] = (np.sum(votes == 1) - np.sum(votes == 0)) / self.k
        return scores

    def parameters_json(self) -> dict:
        rows = []
        for x in self.train_X:
            nz = np.nonzero(x)[0]
            rows.append([nz.tolist(), x[nz].tolist()])
        return {"rows": rows, "dim": self.dim,
                "train_y": self.train_y.tolist(), "k": self.k}

    @classmethod
    def from_parameters(cls, payload, vocab_digest, dim, train_config):
        X = np.zeros((len(payload["rows"]), payload["dim"]))
        for i, (idx, vals) in enumerate(payload["rows"]):
            X[i, idx] = vals
        return cls(X, np.array(payload["train_y"], dtype=int),
                   payload["k"], vocab_digest, train_config)


def train_knn(
    vectors: Sequence[FeatureVector],
    labels: Sequence[int],
    vocab: Vocabulary,
    k: int = 5,
) -> KnnModel:
    if len(vectors) == 0:
        raise ValueError("need at least one training vector")
    if k < 1:
        raise ValueError("k must be >= 1")
    k = min(k, len(vectors))
    X = to_dense(vectors, len(vocab))
    y = np.asarray(labels, dtype=int)
    return KnnModel(X, y, k, vocab.digest())
