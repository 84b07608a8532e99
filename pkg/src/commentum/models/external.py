"""Adapter for classifiers trained elsewhere: score lookup by pair id.

Rows are JSONL objects {"id": ..., "score": ...}; the score is a raw
decision value, mapped to a label through the sigmoid >= 0.5 rule
(equivalently score >= 0).
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import MissingPrediction, SchemaError


class ExternalPredictions:
    algorithm = "external"
    boundary = ">="

    def __init__(self, scores: dict[str, float], name: str = "external"):
        self.scores = scores
        self.name = name

    def __len__(self) -> int:
        return len(self.scores)

    def score_for(self, pair_id: str) -> float:
        if pair_id not in self.scores:
            raise MissingPrediction(pair_id)
        return self.scores[pair_id]

    def predict_id(self, pair_id: str) -> tuple[int, float]:
        score = self.score_for(pair_id)
        return (1 if score >= 0 else 0), score


def load_external_predictions(path: str | Path) -> ExternalPredictions:
    path = Path(path)
    scores: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                row = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"invalid JSON: {exc.msg}", line=lineno) from exc
            if not isinstance(row, dict) or set(row) != {"id", "score"}:
                raise SchemaError("row must be an object with keys id, score",
                                  line=lineno)
            if not isinstance(row["id"], str) or not row["id"]:
                raise SchemaError("id must be a non-empty string", line=lineno,
                                  field="id")
            if not isinstance(row["score"], (int, float)) or isinstance(row["score"], bool):
                raise SchemaError("score must be a number", line=lineno,
                                  field="score")
            scores[row["id"]] = float(row["score"])
    return ExternalPredictions(scores, name=path.stem)
