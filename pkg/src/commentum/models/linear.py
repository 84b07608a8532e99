"""Logistic regression and linear SVM trained by mini-batch (sub)gradient descent.

Both share the same loop: per-epoch shuffle driven by the config seed,
gradients accumulated over grad_accum batches, then one weight update with
the L2 term added at update time. An unregularized bias is trained alongside
the weights.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..features import FeatureVector, Vocabulary
from .base import (
    TrainConfig,
    TrainedModel,
    check_labels_two_classes,
    config_dict,
    register,
    sigmoid,
    to_csr,
)


def _ce_batch_grad(w, b, Xb, yb):
    """Mean cross-entropy gradient over one batch (no regularization)."""
    r = sigmoid(Xb @ w + b) - yb
    return (Xb.T @ r) / Xb.shape[0], float(np.sum(r)) / Xb.shape[0]


def _hinge_batch_grad(w, b, Xb, sb):
    """Mean hinge sub-gradient over one batch; sb holds labels in {-1,+1}.

    At the kink (margin exactly 1) the zero sub-gradient is chosen.
    """
    margins = sb * (Xb @ w + b)
    active = margins < 1.0
    if not np.any(active):
        return np.zeros_like(w), 0.0
    coeff = np.where(active, -sb, 0.0)
    return (Xb.T @ coeff) / Xb.shape[0], float(np.sum(coeff)) / Xb.shape[0]


def logreg_objective(w, b, X, y, l2):
    """Full-batch regularized objective and analytic gradient."""
    z = np.asarray(X @ w + b, dtype=float)
    p = np.clip(sigmoid(z), 1e-12, 1 - 1e-12)
    y = np.asarray(y, dtype=float)
    loss = float(-np.mean(y * np.log(p) + (1 - y) * np.log(1 - p)))
    loss += 0.5 * l2 * float(w @ w)
    gw, gb = _ce_batch_grad(w, b, X, y)
    return loss, gw + l2 * w, gb


def svm_objective(w, b, X, y01, l2):
    """Full-batch hinge objective and analytic sub-gradient; labels in {0,1}."""
    s = np.where(np.asarray(y01) == 1, 1.0, -1.0)
    margins = s * (X @ w + b)
    loss = float(np.mean(np.maximum(0.0, 1.0 - margins)))
    loss += 0.5 * l2 * float(w @ w)
    gw, gb = _hinge_batch_grad(w, b, X, s)
    return loss, gw + l2 * w, gb


def _minibatch_fit(X, targets, cfg: TrainConfig, batch_grad):
    n = X.shape[0]
    w = np.zeros(X.shape[1])
    b = 0.0
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.epochs):
        order = rng.permutation(n)
        batches = [order[i:i + cfg.batch_size] for i in range(0, n, cfg.batch_size)]
        for g in range(0, len(batches), cfg.grad_accum):
            group = batches[g:g + cfg.grad_accum]
            gw = np.zeros_like(w)
            gb = 0.0
            for batch in group:
                bw, bb = batch_grad(w, b, X[batch], targets[batch])
                gw += bw
                gb += bb
            gw = gw / len(group) + cfg.l2 * w
            gb = gb / len(group)
            w = w - cfg.learning_rate * gw
            b = b - cfg.learning_rate * gb
    return w, b


class _LinearModel(TrainedModel):
    boundary = ">="

    def __init__(self, weights: np.ndarray, bias: float, vocab_digest: str,
                 train_config: dict | None = None):
        super().__init__(vocab_digest, len(weights), train_config)
        self.weights = np.asarray(weights, dtype=float)
        self.bias = float(bias)

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        return np.asarray(X @ self.weights + self.bias, dtype=float)

    def parameters_json(self) -> dict:
        return {"weights": self.weights.tolist(), "bias": self.bias}

    @classmethod
    def from_parameters(cls, payload, vocab_digest, dim, train_config):
        return cls(np.array(payload["weights"], dtype=float), payload["bias"],
                   vocab_digest, train_config)


@register
class LogRegModel(_LinearModel):
    algorithm = "logreg"


@register
class SvmModel(_LinearModel):
    algorithm = "svm"


def train_logreg(
    vectors: Sequence[FeatureVector],
    labels: Sequence[int],
    vocab: Vocabulary,
    cfg: TrainConfig = TrainConfig(),
) -> LogRegModel:
    y = check_labels_two_classes(labels).astype(float)
    X = to_csr(vectors, len(vocab))
    w, b = _minibatch_fit(X, y, cfg, _ce_batch_grad)
    return LogRegModel(w, b, vocab.digest(), config_dict(cfg))


def train_svm(
    vectors: Sequence[FeatureVector],
    labels: Sequence[int],
    vocab: Vocabulary,
    cfg: TrainConfig = TrainConfig(),
) -> SvmModel:
    y = check_labels_two_classes(labels)
    s = np.where(y == 1, 1.0, -1.0)
    X = to_csr(vectors, len(vocab))
    w, b = _minibatch_fit(X, s, cfg, _hinge_batch_grad)
    return SvmModel(w, b, vocab.digest(), config_dict(cfg))
