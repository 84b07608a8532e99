"""Sparse term-weight features over comment + code-context text.

The vocabulary is built from training pairs only; vectorizing never
mutates it, so the test split cannot leak into document frequencies.
"""

from __future__ import annotations

import hashlib
import json
import math
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import EmptyVocabulary
from .extractor import CodeCommentPair

# Comment and context are joined around a boundary marker so the models
# can in principle weight terms near the seam.
CONTEXT_SEPARATOR = "§ctx§"

_TOKEN = re.compile(r"\w+")


class Scheme(str, Enum):
    COUNT = "count"
    TFIDF = "tfidf"


def tokenize(text: str) -> list[str]:
    """Lowercase, split on non-word runs, keep tokens of length >= 2."""
    return [t for t in _TOKEN.findall(text.lower()) if len(t) >= 2]


def pair_text(pair: CodeCommentPair) -> str:
    return f"{pair.comment.text}\n{CONTEXT_SEPARATOR}\n{pair.code_context}"


def pair_tokens(pair: CodeCommentPair) -> list[str]:
    return tokenize(pair_text(pair))


@dataclass(frozen=True)
class Vocabulary:
    term_to_index: dict[str, int]
    doc_freq: dict[str, int]
    n_docs: int
    min_df: int
    max_terms: int

    def __len__(self) -> int:
        return len(self.term_to_index)

    @property
    def terms(self) -> list[str]:
        """Terms in index order (indices are dense 0..V-1)."""
        return sorted(self.term_to_index, key=self.term_to_index.__getitem__)

    def idf(self, term: str) -> float:
        # Smoothed so it is never zero and never divides by zero.
        return math.log((1 + self.n_docs) / (1 + self.doc_freq[term])) + 1.0

    def digest(self) -> str:
        payload = json.dumps(self.to_json(), sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]

    def to_json(self) -> dict:
        terms = self.terms
        return {
            "terms": terms,
            "doc_freq": [self.doc_freq[t] for t in terms],
            "n_docs": self.n_docs,
            "min_df": self.min_df,
            "max_terms": self.max_terms,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "Vocabulary":
        terms = payload["terms"]
        return cls(
            term_to_index={t: i for i, t in enumerate(terms)},
            doc_freq=dict(zip(terms, payload["doc_freq"])),
            n_docs=payload["n_docs"],
            min_df=payload["min_df"],
            max_terms=payload["max_terms"],
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json()) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "Vocabulary":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True)
class FeatureVector:
    indices: tuple[int, ...]  # strictly increasing
    values: tuple[float, ...]  # all > 0
    norm: float

    def __len__(self) -> int:
        return len(self.indices)

    def as_dict(self) -> dict[int, float]:
        return dict(zip(self.indices, self.values))


def build_vocab(
    token_docs: list[list[str]],
    min_df: int = 2,
    max_terms: int = 20000,
) -> Vocabulary:
    """Vocabulary from tokenized training docs.

    Terms with document frequency >= min_df survive; the top max_terms by
    (doc_freq desc, term asc) are kept and indexed in term-ascending order.
    """
    if not token_docs:
        raise ValueError("token_docs must be non-empty")
    df: Counter[str] = Counter()
    for tokens in token_docs:
        df.update(set(tokens))
    surviving = [t for t, c in df.items() if c >= min_df]
    if not surviving:
        raise EmptyVocabulary(
            f"no term reaches min_df={min_df} over {len(token_docs)} docs")
    surviving.sort(key=lambda t: (-df[t], t))
    kept = sorted(surviving[:max_terms])
    return Vocabulary(
        term_to_index={t: i for i, t in enumerate(kept)},
        doc_freq={t: df[t] for t in kept},
        n_docs=len(token_docs),
        min_df=min_df,
        max_terms=max_terms,
    )


def build_vocab_from_pairs(
    train_pairs: list[CodeCommentPair],
    min_df: int = 2,
    max_terms: int = 20000,
) -> Vocabulary:
    return build_vocab([pair_tokens(p) for p in train_pairs], min_df, max_terms)


def vectorize_tokens(
    tokens: list[str],
    vocab: Vocabulary,
    scheme: Scheme = Scheme.TFIDF,
) -> FeatureVector:
    """Weight in-vocabulary tokens; out-of-vocabulary tokens are ignored.

    Count: raw term frequencies. TfIdf: tf * smoothed idf, L2-normalized.
    """
    counts: Counter[str] = Counter(t for t in tokens if t in vocab.term_to_index)
    if not counts:
        return FeatureVector((), (), 0.0)
    items = sorted((vocab.term_to_index[t], t) for t in counts)
    indices = tuple(i for i, _ in items)
    if scheme is Scheme.COUNT:
        values = tuple(float(counts[t]) for _, t in items)
        norm = math.sqrt(sum(v * v for v in values))
        return FeatureVector(indices, values, norm)
    raw = [counts[t] * vocab.idf(t) for _, t in items]
    norm = math.sqrt(sum(v * v for v in raw))
    values = tuple(v / norm for v in raw)
    return FeatureVector(indices, values, 1.0)


def vectorize(
    pair: CodeCommentPair,
    vocab: Vocabulary,
    scheme: Scheme = Scheme.TFIDF,
) -> FeatureVector:
    return vectorize_tokens(pair_tokens(pair), vocab, scheme)
