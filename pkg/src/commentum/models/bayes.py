"""Multinomial Naive Bayes over term-count (or term-weight) vectors."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..features import FeatureVector, Vocabulary
from .base import TrainedModel, check_labels_two_classes, register, to_csr

# Likelihood floor keeps scores finite when alpha=0 leaves zero-count terms.
_LOG_FLOOR = math.log(1e-300)


@register
class NaiveBayesModel(TrainedModel):
    algorithm = "nb"
    boundary = ">"  # exact posterior ties fall to Not Useful

    def __init__(self, log_prior: np.ndarray, log_lik: np.ndarray,
                 vocab_digest: str, train_config: dict | None = None):
        super().__init__(vocab_digest, log_lik.shape[1], train_config)
        self.log_prior = np.asarray(log_prior, dtype=float)  # shape (2,)
        self.log_lik = np.asarray(log_lik, dtype=float)  # shape (2, V)

    def class_log_posteriors(self, X: np.ndarray) -> np.ndarray:
        return X @ self.log_lik.T + self.log_prior

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        lp = self.class_log_posteriors(X)
        return lp[:, 1] - lp[:, 0]

    def parameters_json(self) -> dict:
        return {"log_prior": self.log_prior.tolist(),
                "log_lik": self.log_lik.tolist()}

    @classmethod
    def from_parameters(cls, payload, vocab_digest, dim, train_config):
        return cls(np.array(payload["log_prior"]), np.array(payload["log_lik"]),
                   vocab_digest, train_config)


def train_nb(
    vectors: Sequence[FeatureVector],
    labels: Sequence[int],
    vocab: Vocabulary,
    alpha: float = 1.0,
) -> NaiveBayesModel:
    """Class log-priors from label frequencies, per-term log-likelihoods with
    additive smoothing alpha."""
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    y = check_labels_two_classes(labels)
    X = to_csr(vectors, len(vocab))
    V = len(vocab)
    n = len(y)

    log_prior = np.empty(2)
    log_lik = np.empty((2, V))
    for cls_ in (0, 1):
        mask = y == cls_
        log_prior[cls_] = math.log(mask.sum() / n)
        counts = np.asarray(X[mask].sum(axis=0)).ravel()
        total = counts.sum()
        denom = total + alpha * V
        if denom <= 0:  # alpha=0 and no mass in this class: uniform fallback
            ll = np.full(V, -math.log(V))
        else:
            with np.errstate(divide="ignore"):
                ll = np.log(counts + alpha) - math.log(denom)
        log_lik[cls_] = np.maximum(ll, _LOG_FLOOR)
    return NaiveBayesModel(log_prior, log_lik, vocab.digest())
