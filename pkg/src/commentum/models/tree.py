"""CART decision tree with Gini impurity, and a bagged forest on top.

Splits are "feature <= threshold" with thresholds at midpoints between
consecutive distinct values. The best split maximizes impurity decrease;
ties go to the lower feature index, then the lower threshold, which the
ascending search order yields for free.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import SingleClassTrainingSet
from ..features import FeatureVector, Vocabulary
from .base import TrainedModel, register, to_dense


def gini(labels: np.ndarray) -> float:
    """Gini impurity 1 - sum(p_i^2) of a label array."""
    n = len(labels)
    if n == 0:
        return 0.0
    p1 = float(np.sum(labels)) / n
    return 1.0 - (p1 * p1 + (1.0 - p1) * (1.0 - p1))


def best_split(
    X: np.ndarray,
    y: np.ndarray,
    min_leaf: int,
    features: Sequence[int] | None = None,
) -> tuple[int, float, float] | None:
    """(feature, threshold, impurity_decrease) of the best valid split, or None.

    A split is valid when both children hold at least min_leaf points and the
    impurity decrease is strictly positive.
    """
    n = len(y)
    parent = gini(y)
    best: tuple[float, int, float] | None = None
    cols = range(X.shape[1]) if features is None else features
    for f in cols:
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        sorted_vals = col[order]
        sorted_y = y[order]
        # prefix sums of positives let each threshold be scored in O(1)
        pos_prefix = np.cumsum(sorted_y)
        distinct = np.nonzero(np.diff(sorted_vals))[0]  # split after these ranks
        for idx in distinct:
            n_left = idx + 1
            n_right = n - n_left
            if n_left < min_leaf or n_right < min_leaf:
                continue
            threshold = (sorted_vals[idx] + sorted_vals[idx + 1]) / 2.0
            pos_left = pos_prefix[idx]
            p1l = pos_left / n_left
            p1r = (pos_prefix[-1] - pos_left) / n_right
            g_left = 1.0 - (p1l * p1l + (1.0 - p1l) * (1.0 - p1l))
            g_right = 1.0 - (p1r * p1r + (1.0 - p1r) * (1.0 - p1r))
            decrease = parent - (n_left / n) * g_left - (n_right / n) * g_right
            if decrease <= 0:
                continue
            if best is None or decrease > best[0]:
                best = (decrease, f, threshold)
    if best is None:
        return None
    return best[1], best[2], best[0]


def _grow(X, y, depth, max_depth, min_leaf, rng, n_features_split):
    counts = [int(np.sum(y == 0)), int(np.sum(y == 1))]
    if depth >= max_depth or len(y) < 2 * min_leaf or counts[0] == 0 or counts[1] == 0:
        return {"counts": counts}
    features = None
    if n_features_split is not None and n_features_split < X.shape[1]:
        features = np.sort(rng.choice(X.shape[1], n_features_split, replace=False))
    found = best_split(X, y, min_leaf, features)
    if found is None:
        return {"counts": counts}
    f, t, _ = found
    left = X[:, f] <= t
    return {
        "feature": int(f),
        "threshold": float(t),
        "left": _grow(X[left], y[left], depth + 1, max_depth, min_leaf,
                      rng, n_features_split),
        "right": _grow(X[~left], y[~left], depth + 1, max_depth, min_leaf,
                       rng, n_features_split),
    }


def _leaf_score(node) -> float:
    n0, n1 = node["counts"]
    total = n0 + n1
    return (n1 - n0) / total if total else 0.0


def _tree_score(node, x) -> float:
    while "feature" in node:
        node = node["left"] if x[node["feature"]] <= node["threshold"] else node["right"]
    return _leaf_score(node)


@register
class TreeModel(TrainedModel):
    algorithm = "tree"
    boundary = ">"

    def __init__(self, root: dict, dim: int, vocab_digest: str,
                 train_config: dict | None = None):
        super().__init__(vocab_digest, dim, train_config)
        self.root = root

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        return np.array([_tree_score(self.root, x) for x in X])

    def parameters_json(self) -> dict:
        return {"root": self.root}

    @classmethod
    def from_parameters(cls, payload, vocab_digest, dim, train_config):
        return cls(payload["root"], dim, vocab_digest, train_config)


@register
class ForestModel(TrainedModel):
    algorithm = "forest"
    boundary = ">"

    def __init__(self, roots: list[dict], dim: int, vocab_digest: str,
                 train_config: dict | None = None):
        super().__init__(vocab_digest, dim, train_config)
        self.roots = roots

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        # Majority vote margin: mean of per-tree vote signs.
        votes = np.zeros(len(X))
        for root in self.roots:
            tree_scores = np.array([_tree_score(root, x) for x in X])
            votes += np.where(tree_scores > 0, 1.0, -1.0)
        return votes / len(self.roots)

    def parameters_json(self) -> dict:
        return {"roots": self.roots}

    @classmethod
    def from_parameters(cls, payload, vocab_digest, dim, train_config):
        return cls(payload["roots"], dim, vocab_digest, train_config)


def train_tree(
    vectors: Sequence[FeatureVector],
    labels: Sequence[int],
    vocab: Vocabulary,
    max_depth: int = 10,
    min_leaf: int = 1,
) -> TreeModel:
    """Single CART tree. A single-class training set degenerates to one leaf;
    only an empty set is an error."""
    if len(vectors) == 0:
        raise SingleClassTrainingSet("empty training set")
    y = np.asarray(labels, dtype=int)
    X = to_dense(vectors, len(vocab))
    root = _grow(X, y, 0, max_depth, min_leaf, None, None)
    return TreeModel(root, len(vocab), vocab.digest(),
                     {"max_depth": max_depth, "min_leaf": min_leaf})


def train_forest(
    vectors: Sequence[FeatureVector],
    labels: Sequence[int],
    vocab: Vocabulary,
    n_trees: int = 25,
    feature_frac: float = 0.5,
    seed: int = 0,
    max_depth: int = 10,
    min_leaf: int = 1,
) -> ForestModel:
    """Bagged trees: bootstrap samples plus per-split feature subsampling.

    Each tree draws from its own rng stream keyed by (seed, tree index), so
    tree construction order cannot perturb determinism.
    """
    if len(vectors) == 0:
        raise SingleClassTrainingSet("empty training set")
    if not 0 < feature_frac <= 1:
        raise ValueError("feature_frac must be in (0, 1]")
    y = np.asarray(labels, dtype=int)
    X = to_dense(vectors, len(vocab))
    n, dim = X.shape
    k = max(1, round(feature_frac * dim))
    roots = []
    for t in range(n_trees):
        rng = np.random.default_rng([seed, t])
        sample = rng.integers(0, n, n)
        roots.append(_grow(X[sample], y[sample], 0, max_depth, min_leaf,
                           rng, k if k < dim else None))
    cfg = {"n_trees": n_trees, "feature_frac": feature_frac, "seed": seed,
           "max_depth": max_depth, "min_leaf": min_leaf}
    return ForestModel(roots, dim, vocab.digest(), cfg)
