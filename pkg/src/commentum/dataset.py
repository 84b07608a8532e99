"""Pair collections on disk: JSONL persistence, labeling, splits, merging.

One pair per JSONL line. Keys are fixed; unknown keys are rejected with
the offending line number so schema drift surfaces immediately.
"""

from __future__ import annotations

import csv
import hashlib
import json
import os
import random
import re
import tempfile
import time
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import (
    DuplicateId,
    InsufficientLabels,
    SchemaError,
    UnlabeledGenerated,
)
from .extractor import CodeCommentPair, CommentKind, RawComment, Source

JSONL_KEYS = (
    "id", "repo", "path", "line_start", "line_end", "kind", "trailing",
    "comment", "code_context", "label", "source", "generator",
)

_WS = re.compile(r"\s+")


@dataclass
class Dataset:
    pairs: list[CodeCommentPair] = field(default_factory=list)
    name: str = ""
    created_at: float = 0.0

    def __post_init__(self):
        ids = [p.id for p in self.pairs]
        if len(set(ids)) != len(ids):
            seen = set()
            for pid in ids:
                if pid in seen:
                    raise DuplicateId(pid)
                seen.add(pid)

    def __len__(self) -> int:
        return len(self.pairs)

    def by_id(self) -> dict[str, CodeCommentPair]:
        return {p.id: p for p in self.pairs}

    def labeled(self) -> list[CodeCommentPair]:
        return [p for p in self.pairs if p.label is not None]

    def digest(self) -> str:
        """Content digest over the persisted form, for run manifests."""
        h = hashlib.sha256()
        for p in self.pairs:
            h.update(json.dumps(pair_to_row(p), sort_keys=True).encode("utf-8"))
            h.update(b"\n")
        return h.hexdigest()


@dataclass(frozen=True)
class SplitAssignment:
    train_ids: frozenset[str]
    test_ids: frozenset[str]
    seed: int
    ratio: float


def pair_to_row(p: CodeCommentPair) -> dict:
    return {
        "id": p.id,
        "repo": p.repo_id,
        "path": p.path,
        "line_start": p.comment.line_start,
        "line_end": p.comment.line_end,
        "kind": p.comment.kind.value,
        "trailing": p.comment.trailing,
        "comment": p.comment.text,
        "code_context": p.code_context,
        "label": p.label,
        "source": p.source.value,
        "generator": p.generator,
    }


def row_to_pair(row: dict, line: int = 0) -> CodeCommentPair:
    unknown = set(row) - set(JSONL_KEYS)
    if unknown:
        raise SchemaError(f"unknown key {sorted(unknown)[0]!r}", line=line,
                          field=sorted(unknown)[0])
    for key in JSONL_KEYS:
        if key not in row:
            raise SchemaError(f"missing key {key!r}", line=line, field=key)
    if row["kind"] not in ("single", "multi"):
        raise SchemaError(f"bad kind {row['kind']!r}", line=line, field="kind")
    if row["label"] not in (0, 1, None):
        raise SchemaError(f"bad label {row['label']!r}", line=line, field="label")
    if row["source"] not in ("seed", "generated"):
        raise SchemaError(f"bad source {row['source']!r}", line=line, field="source")
    if not isinstance(row["id"], str) or not row["id"]:
        raise SchemaError("id must be a non-empty string", line=line, field="id")
    for key in ("line_start", "line_end"):
        if not isinstance(row[key], int) or row[key] < 1:
            raise SchemaError(f"{key} must be a positive integer", line=line, field=key)
    if not isinstance(row["trailing"], bool):
        raise SchemaError("trailing must be a bool", line=line, field="trailing")
    for key in ("comment", "code_context"):
        if not isinstance(row[key], str):
            raise SchemaError(f"{key} must be a string", line=line, field=key)
    comment = RawComment(
        kind=CommentKind(row["kind"]),
        text=row["comment"],
        line_start=row["line_start"],
        line_end=row["line_end"],
        trailing=row["trailing"],
    )
    return CodeCommentPair(
        id=row["id"],
        repo_id=row["repo"],
        path=row["path"],
        comment=comment,
        code_context=row["code_context"],
        label=row["label"],
        source=Source(row["source"]),
        generator=row["generator"],
    )


def load(path: str | Path) -> Dataset:
    path = Path(path)
    pairs = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                row = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"invalid JSON: {exc.msg}", line=lineno) from exc
            if not isinstance(row, dict):
                raise SchemaError("row is not an object", line=lineno)
            pair = row_to_pair(row, line=lineno)
            if pair.id in seen:
                raise DuplicateId(pair.id, line=lineno)
            seen.add(pair.id)
            pairs.append(pair)
    return Dataset(pairs=pairs, name=path.stem, created_at=time.time())


def save(dataset: Dataset, path: str | Path) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    path = Path(path)
    write_atomic(path, serialize(dataset))


def serialize(dataset: Dataset) -> str:
    return "".join(
        json.dumps(pair_to_row(p), ensure_ascii=False, sort_keys=False) + "\n"
        for p in dataset.pairs
    )


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def export_csv(dataset: Dataset, path: str | Path) -> None:
    """Same columns as the JSONL, for spreadsheet review."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=JSONL_KEYS)
            writer.writeheader()
            for p in dataset.pairs:
                row = pair_to_row(p)
                row["label"] = "" if row["label"] is None else row["label"]
                row["generator"] = "" if row["generator"] is None else row["generator"]
                writer.writerow(row)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _round_half_up(x: float) -> int:
    return int(x + 0.5)


def split(dataset: Dataset, ratio: float, seed: int) -> SplitAssignment:
    """Stratified train/test split over the labeled pairs.

    Per class, round-half-up of ratio * class size goes to test and the
    remainder to train; the shuffle is deterministic in (dataset order, seed).
    """
    if not 0 < ratio < 1:
        raise ValueError("ratio must be in (0, 1)")
    labeled = dataset.labeled()
    by_class: dict[int, list[str]] = {0: [], 1: []}
    for p in labeled:
        by_class[p.label].append(p.id)
    if any(len(ids) < 2 for ids in by_class.values()):
        raise InsufficientLabels(
            f"need >= 2 labeled pairs per class, have "
            f"{len(by_class[1])} useful / {len(by_class[0])} not useful")

    rng = random.Random(seed)
    test_ids: set[str] = set()
    for cls in (0, 1):
        ids = list(by_class[cls])
        rng.shuffle(ids)
        n_test = _round_half_up(ratio * len(ids))
        test_ids.update(ids[:n_test])
    train_ids = {p.id for p in labeled} - test_ids
    return SplitAssignment(frozenset(train_ids), frozenset(test_ids), seed, ratio)


def save_split(assignment: SplitAssignment, path: str | Path) -> None:
    payload = {
        "seed": assignment.seed,
        "ratio": assignment.ratio,
        "train_ids": sorted(assignment.train_ids),
        "test_ids": sorted(assignment.test_ids),
    }
    write_atomic(Path(path), json.dumps(payload, indent=2) + "\n")


def load_split(path: str | Path) -> SplitAssignment:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    return SplitAssignment(
        train_ids=frozenset(payload["train_ids"]),
        test_ids=frozenset(payload["test_ids"]),
        seed=payload["seed"],
        ratio=payload["ratio"],
    )


def duplicate_key(pair: CodeCommentPair) -> str:
    """Near-duplicate digest: lowercased, whitespace-collapsed comment + context."""
    norm = _WS.sub(" ", pair.comment.text.lower()).strip()
    ctx = _WS.sub(" ", pair.code_context.lower()).strip()
    return hashlib.sha256(f"{norm}\x00{ctx}".encode("utf-8")).hexdigest()


def merge(seed_ds: Dataset, generated_ds: Dataset) -> Dataset:
    """Concatenate seed and generated pairs, dropping exact near-duplicates.

    Seed pairs win ties. Every generated pair must arrive labeled.
    """
    for p in generated_ds.pairs:
        if p.source is not Source.GENERATED:
            raise ValueError(f"pair {p.id} in generated dataset has source={p.source.value}")
        if p.label is None:
            raise UnlabeledGenerated(p.id)
    out = list(seed_ds.pairs)
    seen_keys = {duplicate_key(p) for p in seed_ds.pairs}
    seen_ids = {p.id for p in seed_ds.pairs}
    for p in generated_ds.pairs:
        key = duplicate_key(p)
        if key in seen_keys or p.id in seen_ids:
            continue
        seen_keys.add(key)
        seen_ids.add(p.id)
        out.append(p)
    return Dataset(pairs=out, name=f"{seed_ds.name}+{generated_ds.name}",
                   created_at=time.time())


def label_stats(dataset: Dataset) -> tuple[int, int, int]:
    """(n_useful, n_not_useful, n_unlabeled); the three sum to len(dataset)."""
    n_useful = sum(1 for p in dataset.pairs if p.label == 1)
    n_not = sum(1 for p in dataset.pairs if p.label == 0)
    return n_useful, n_not, len(dataset.pairs) - n_useful - n_not


def apply_labels(dataset: Dataset, labels: dict[str, int], force: bool = False) -> Dataset:
    """Return a new dataset with labels applied by pair id.

    Refuses to overwrite an existing label unless force is set.
    """
    by_id = dataset.by_id()
    for pid in labels:
        if pid not in by_id:
            raise KeyError(f"unknown pair id {pid!r}")
    out = []
    for p in dataset.pairs:
        if p.id in labels:
            if p.label is not None and not force and p.label != labels[p.id]:
                raise ValueError(
                    f"pair {p.id} already labeled {p.label}; use force to relabel")
            out.append(replace(p, label=labels[p.id]))
        else:
            out.append(p)
    return Dataset(pairs=out, name=dataset.name, created_at=dataset.created_at)
