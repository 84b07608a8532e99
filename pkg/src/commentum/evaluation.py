"""Confusion matrices, Acc/P/R/F1, and the seed-vs-augmented comparison.

Useful (label 1) is the positive class throughout. Degenerate denominators
follow the zero convention: P := 0 when tp+fp = 0, R := 0 when tp+fn = 0,
F1 := 0 when P+R = 0.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .dataset import Dataset, SplitAssignment, merge, split
from .errors import LengthMismatch, UnlabeledTestPair, VocabularyMismatch
from .extractor import CodeCommentPair, Source
from .features import Scheme, Vocabulary, build_vocab_from_pairs, vectorize
from .models import (
    ALGORITHM_LABELS,
    TRAINERS,
    ExternalPredictions,
    TrainConfig,
    TrainedModel,
    predict_batch,
)


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricSet:
    accuracy: float
    precision: float
    recall: float
    f1: float
    support: int


def confusion(predictions: list[int], labels: list[int]) -> ConfusionMatrix:
    if len(predictions) != len(labels):
        raise LengthMismatch(f"{len(predictions)} predictions vs {len(labels)} labels")
    if not predictions:
        raise ValueError("empty evaluation set")
    tp = fp = fn = tn = 0
    for pred, lab in zip(predictions, labels):
        if pred == 1 and lab == 1:
            tp += 1
        elif pred == 1 and lab == 0:
            fp += 1
        elif pred == 0 and lab == 1:
            fn += 1
        else:
            tn += 1
    return ConfusionMatrix(tp, fp, fn, tn)


def metrics(cm: ConfusionMatrix) -> MetricSet:
    total = cm.total
    if total == 0:
        raise ValueError("empty confusion matrix")
    accuracy = (cm.tp + cm.tn) / total
    precision = cm.tp / (cm.tp + cm.fp) if cm.tp + cm.fp else 0.0
    recall = cm.tp / (cm.tp + cm.fn) if cm.tp + cm.fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return MetricSet(accuracy, precision, recall, f1, total)


@dataclass(frozen=True)
class EvalResult:
    metrics: MetricSet
    confusion: ConfusionMatrix


def _test_pairs(dataset: Dataset, assignment: SplitAssignment) -> list[CodeCommentPair]:
    pairs = [p for p in dataset.pairs if p.id in assignment.test_ids]
    for p in pairs:
        if p.label is None:
            raise UnlabeledTestPair(f"test pair {p.id} is unlabeled")
    return pairs


def evaluate(
    model: TrainedModel | ExternalPredictions,
    dataset: Dataset,
    assignment: SplitAssignment,
    vocab: Vocabulary | None = None,
    scheme: Scheme = Scheme.TFIDF,
) -> EvalResult:
    """Metrics of a model on the test split. Native models need the vocabulary
    their vectors came from; external predictions are looked up by pair id."""
    test = _test_pairs(dataset, assignment)
    if not test:
        raise ValueError("empty test split")
    labels = [p.label for p in test]
    if isinstance(model, ExternalPredictions):
        preds = [model.predict_id(p.id)[0] for p in test]
    else:
        if vocab is None:
            raise ValueError("native models require the training vocabulary")
        if vocab.digest() != model.vocab_digest:
            raise VocabularyMismatch(
                f"vocabulary {vocab.digest()} != model vocabulary {model.vocab_digest}")
        vectors = [vectorize(p, vocab, scheme) for p in test]
        preds = [label for label, _ in predict_batch(model, vectors)]
    cm = confusion(preds, labels)
    return EvalResult(metrics(cm), cm)


def score_pairs(
    model: TrainedModel | ExternalPredictions,
    pairs: list[CodeCommentPair],
    vocab: Vocabulary | None = None,
    scheme: Scheme = Scheme.TFIDF,
) -> list[tuple[int, float]]:
    if isinstance(model, ExternalPredictions):
        return [model.predict_id(p.id) for p in pairs]
    if vocab is None:
        raise ValueError("native models require the training vocabulary")
    vectors = [vectorize(p, vocab, scheme) for p in pairs]
    return predict_batch(model, vectors, vocab.digest())


@dataclass(frozen=True)
class Discrepancy:
    pair_id: str
    manual_label: int
    predicted_label: int
    score: float


def discrepancies(
    manual_pairs: list[CodeCommentPair],
    model: TrainedModel | ExternalPredictions,
    vocab: Vocabulary | None = None,
    scheme: Scheme = Scheme.TFIDF,
) -> list[Discrepancy]:
    """Pairs where the model disagrees with the manual label, most confident
    errors first (ties keep dataset order)."""
    labeled = [p for p in manual_pairs if p.label is not None]
    results = score_pairs(model, labeled, vocab, scheme)
    out = []
    for i, (p, (pred, score)) in enumerate(zip(labeled, results)):
        if pred != p.label:
            out.append((i, Discrepancy(p.id, p.label, pred, score)))
    out.sort(key=lambda item: (-abs(item[1].score), item[0]))
    return [d for _, d in out]


def derive_seed(split_seed: int, algorithm: str) -> int:
    """Stable per-algorithm rng seed; shared by both comparison conditions."""
    digest = hashlib.sha256(f"{split_seed}:{algorithm}".encode()).digest()
    return int.from_bytes(digest[:4], "big")


@dataclass
class AlgorithmRow:
    key: str
    label: str
    seed_result: EvalResult | None = None
    augmented_result: EvalResult | None = None
    deltas: dict[str, float] | None = None

    @property
    def partial(self) -> bool:
        return self.seed_result is None or self.augmented_result is None


@dataclass
class ComparisonReport:
    rows: list[AlgorithmRow]
    metadata: dict = field(default_factory=dict)


def _train_one(
    algorithm: str,
    train_pairs: list[CodeCommentPair],
    split_seed: int,
    algo_config: dict,
    scheme: Scheme,
    min_df: int,
    max_terms: int,
) -> tuple[TrainedModel, Vocabulary]:
    vocab = build_vocab_from_pairs(train_pairs, min_df=min_df, max_terms=max_terms)
    vectors = [vectorize(p, vocab, scheme) for p in train_pairs]
    labels = [p.label for p in train_pairs]
    cfg = dict(algo_config)
    if algorithm in ("logreg", "svm"):
        cfg.setdefault("seed", derive_seed(split_seed, algorithm))
        tc = TrainConfig(**cfg)
        model = TRAINERS[algorithm](vectors, labels, vocab, tc)
    elif algorithm == "forest":
        cfg.setdefault("seed", derive_seed(split_seed, algorithm))
        model = TRAINERS[algorithm](vectors, labels, vocab, **cfg)
    else:
        model = TRAINERS[algorithm](vectors, labels, vocab, **cfg)
    return model, vocab


def compare(
    algorithms: list[str],
    seed_ds: Dataset,
    generated_ds: Dataset,
    ratio: float = 0.2,
    split_seed: int = 42,
    algo_configs: dict[str, dict] | None = None,
    scheme: Scheme = Scheme.TFIDF,
    min_df: int = 2,
    max_terms: int = 20000,
    external: dict[str, tuple[ExternalPredictions | None, ExternalPredictions | None]] | None = None,
) -> ComparisonReport:
    """Train and evaluate each algorithm on seed data, then on seed+generated.

    One split is drawn from the seed dataset and shared by both conditions;
    generated pairs only ever augment the training side, so the test set stays
    free of generator output. External prediction files fill the rows for
    models trained elsewhere.
    """
    algo_configs = algo_configs or {}
    for a in algorithms:
        if a not in TRAINERS:
            raise ValueError(f"unknown algorithm {a!r}")

    assignment = split(seed_ds, ratio, split_seed)
    generated_ids = {p.id for p in generated_ds.pairs}
    overlap = generated_ids & assignment.test_ids
    if overlap:
        raise AssertionError(
            f"test-set purity violated: generated pairs in test split: {sorted(overlap)[:5]}")

    merged = merge(seed_ds, generated_ds)
    seed_train = [p for p in seed_ds.pairs
                  if p.id in assignment.train_ids and p.label is not None]
    aug_train = seed_train + [p for p in merged.pairs if p.source is Source.GENERATED]

    rows = []
    for algo in algorithms:
        row = AlgorithmRow(key=algo, label=ALGORITHM_LABELS[algo])
        cfg = algo_configs.get(algo, {})
        model_s, vocab_s = _train_one(algo, seed_train, split_seed, cfg,
                                      scheme, min_df, max_terms)
        row.seed_result = evaluate(model_s, seed_ds, assignment, vocab_s, scheme)
        model_a, vocab_a = _train_one(algo, aug_train, split_seed, cfg,
                                      scheme, min_df, max_terms)
        row.augmented_result = evaluate(model_a, seed_ds, assignment, vocab_a, scheme)
        row.deltas = _deltas(row)
        rows.append(row)

    for name, (pred_seed, pred_aug) in (external or {}).items():
        row = AlgorithmRow(key=f"external:{name}", label=name)
        if pred_seed is not None:
            row.seed_result = evaluate(pred_seed, seed_ds, assignment)
        if pred_aug is not None:
            row.augmented_result = evaluate(pred_aug, seed_ds, assignment)
        if not row.partial:
            row.deltas = _deltas(row)
        rows.append(row)

    metadata = {
        "seed_dataset": {"name": seed_ds.name, "digest": seed_ds.digest(),
                         "pairs": len(seed_ds)},
        "generated_dataset": {"name": generated_ds.name,
                              "digest": generated_ds.digest(),
                              "pairs": len(generated_ds)},
        "split": {"ratio": ratio, "seed": split_seed,
                  "train": len(assignment.train_ids),
                  "test": len(assignment.test_ids)},
        "featurizer": {"scheme": scheme.value, "min_df": min_df,
                       "max_terms": max_terms},
        "algorithms": {a: algo_configs.get(a, {}) for a in algorithms},
    }
    return ComparisonReport(rows=rows, metadata=metadata)


def _deltas(row: AlgorithmRow) -> dict[str, float]:
    s, a = row.seed_result.metrics, row.augmented_result.metrics
    return {
        "accuracy": a.accuracy - s.accuracy,
        "precision": a.precision - s.precision,
        "recall": a.recall - s.recall,
        "f1": a.f1 - s.f1,
    }
