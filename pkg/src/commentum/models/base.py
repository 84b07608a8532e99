"""Shared model machinery: training config, loss, prediction, serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy import sparse

from ..dataset import write_atomic
from ..errors import EmptyBatch, LengthMismatch, VocabularyMismatch
from ..features import FeatureVector

PROB_CLAMP = 1e-12


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.1
    batch_size: int = 8
    grad_accum: int = 4
    epochs: int = 100
    l2: float = 1e-4
    seed: int = 0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if self.batch_size < 1 or self.grad_accum < 1:
            raise ValueError("batch_size and grad_accum must be >= 1")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.l2 < 0:
            raise ValueError("l2 must be >= 0")


# "conservative" keeps the low-rate small-batch accumulation schedule
# usable end to end even though it converges slowly on these features.
PRESETS = {
    "practical": TrainConfig(),
    "conservative": TrainConfig(learning_rate=1e-6, batch_size=8, grad_accum=4),
}


def sigmoid(z):
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def cross_entropy_loss(scores: Sequence[float], labels: Sequence[int]) -> float:
    """Mean negative log-likelihood of labels under sigmoid(scores).

    Probabilities are clamped to [1e-12, 1 - 1e-12] before the log, so the
    loss stays finite under saturation.
    """
    if len(scores) != len(labels):
        raise LengthMismatch(f"{len(scores)} scores vs {len(labels)} labels")
    if len(scores) == 0:
        raise EmptyBatch("need at least one (score, label)")
    p = np.clip(sigmoid(np.asarray(scores, dtype=float)), PROB_CLAMP, 1 - PROB_CLAMP)
    y = np.asarray(labels, dtype=float)
    return float(-np.mean(y * np.log(p) + (1 - y) * np.log(1 - p)))


def to_dense(vectors: Sequence[FeatureVector], dim: int) -> np.ndarray:
    X = np.zeros((len(vectors), dim), dtype=float)
    for i, v in enumerate(vectors):
        if v.indices:
            X[i, list(v.indices)] = v.values
    return X


def to_csr(vectors: Sequence[FeatureVector], dim: int) -> sparse.csr_matrix:
    data, indices, indptr = [], [], [0]
    for v in vectors:
        data.extend(v.values)
        indices.extend(v.indices)
        indptr.append(len(indices))
    return sparse.csr_matrix(
        (np.array(data, dtype=float), np.array(indices, dtype=np.int32),
         np.array(indptr, dtype=np.int32)),
        shape=(len(vectors), dim))


def vector_to_row(v: FeatureVector, dim: int) -> np.ndarray:
    x = np.zeros(dim, dtype=float)
    if v.indices:
        x[list(v.indices)] = v.values
    return x


class TrainedModel:
    """Base fitted classifier: a deterministic decision score plus a label rule."""

    algorithm: str = ""
    # ">=": score >= 0 predicts Useful. ">": exact ties fall to Not Useful.
    boundary: str = ">"

    def __init__(self, vocab_digest: str, dim: int, train_config: dict | None = None):
        self.vocab_digest = vocab_digest
        self.dim = dim
        self.train_config = train_config or {}

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def decision_score(self, x: np.ndarray) -> float:
        return float(self.decision_scores(x.reshape(1, -1))[0])

    def labels_from_scores(self, scores: np.ndarray) -> np.ndarray:
        if self.boundary == ">=":
            return (scores >= 0).astype(int)
        return (scores > 0).astype(int)

    def parameters_json(self) -> dict:
        raise NotImplementedError

    @classmethod
    def from_parameters(cls, payload: dict, vocab_digest: str, dim: int,
                        train_config: dict) -> "TrainedModel":
        raise NotImplementedError


def predict(model: TrainedModel, vector: FeatureVector,
            vocab_digest: str | None = None) -> tuple[int, float]:
    """(label, signed decision score) for one vector.

    When the caller knows which vocabulary produced the vector, passing its
    digest lets the mismatch surface here instead of as garbage scores.
    """
    if vocab_digest is not None and vocab_digest != model.vocab_digest:
        raise VocabularyMismatch(
            f"vector vocabulary {vocab_digest} != model vocabulary {model.vocab_digest}")
    if vector.indices and vector.indices[-1] >= model.dim:
        raise VocabularyMismatch(
            f"vector index {vector.indices[-1]} out of range for dim {model.dim}")
    score = model.decision_score(vector_to_row(vector, model.dim))
    return int(model.labels_from_scores(np.array([score]))[0]), score


def predict_batch(model: TrainedModel, vectors: Sequence[FeatureVector],
                  vocab_digest: str | None = None) -> list[tuple[int, float]]:
    if vocab_digest is not None and vocab_digest != model.vocab_digest:
        raise VocabularyMismatch(
            f"vectors vocabulary {vocab_digest} != model vocabulary {model.vocab_digest}")
    X = to_dense(vectors, model.dim)
    scores = model.decision_scores(X)
    labels = model.labels_from_scores(scores)
    return [(int(l), float(s)) for l, s in zip(labels, scores)]


_REGISTRY: dict[str, type[TrainedModel]] = {}


def register(cls: type[TrainedModel]) -> type[TrainedModel]:
    _REGISTRY[cls.algorithm] = cls
    return cls


def model_to_json(model: TrainedModel) -> dict:
    return {
        "algorithm": model.algorithm,
        "vocab_digest": model.vocab_digest,
        "dim": model.dim,
        "train_config": model.train_config,
        "parameters": model.parameters_json(),
    }


def save_model(model: TrainedModel, path: str | Path) -> None:
    write_atomic(Path(path), json.dumps(model_to_json(model), sort_keys=True) + "\n")


def load_model(path: str | Path) -> TrainedModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    algorithm = payload["algorithm"]
    if algorithm not in _REGISTRY:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    cls = _REGISTRY[algorithm]
    return cls.from_parameters(
        payload["parameters"], payload["vocab_digest"], payload["dim"],
        payload["train_config"])


def config_dict(cfg: TrainConfig) -> dict:
    return asdict(cfg)


def check_labels_two_classes(labels: Sequence[int]) -> np.ndarray:
    from ..errors import SingleClassTrainingSet

    y = np.asarray(labels, dtype=int)
    if y.size == 0:
        raise SingleClassTrainingSet("empty training set")
    if not set(np.unique(y)) <= {0, 1}:
        raise ValueError("labels must be 0 or 1")
    if len(np.unique(y)) < 2:
        raise SingleClassTrainingSet("training set has a single class")
    return y
