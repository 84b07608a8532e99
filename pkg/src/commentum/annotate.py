"""HTTP labeling service: serve unlabeled pairs, accept judgments, export.

All label writes funnel through one lock and the dataset file is rewritten
atomically before a submission is acknowledged, so an acknowledged label
survives a crash and concurrent annotators resolve races first-write-wins.
"""

from __future__ import annotations

import json
import threading
import time
from pathlib import Path

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .dataset import Dataset, load, pair_to_row, save
from .errors import AlreadyLabeled, SessionComplete, StorageError, UnknownPair

GUIDELINES = """\
Label a comment Useful (key U) when it genuinely helps a reader work with
the code next to it: it explains intent or tricky behavior, documents a
contract or unit, warns about a pitfall, or adds information the code does
not already state.

Label it Not Useful (key N) when it adds nothing: it restates the code,
is stale or wrong, is noise (dividers, commented-out code, TODO stubs
without content), or is too vague or garbled to aid understanding.

Judge the comment against its surrounding code, not in isolation: a short
comment can be Useful where the code is subtle, and a long one Not Useful
where it merely narrates."""

LABEL_VALUES = {"useful": 1, "not_useful": 0}


class LabelStore:
    """Single-writer label state over one dataset file."""

    def __init__(self, dataset_path: str | Path, target_count: int = 100):
        self.path = Path(dataset_path)
        self.dataset: Dataset = load(self.path)
        if target_count < 1:
            raise ValueError("target_count must be >= 1")
        self.target = min(target_count, len(self.dataset))
        self.started_at = time.time()
        self._lock = threading.Lock()

    def labeled_count(self) -> int:
        return min(self.target, len(self.dataset.labeled()))

    def complete(self) -> bool:
        return self.labeled_count() >= self.target

    def next_unlabeled(self, limit: int):
        with self._lock:
            if self.complete():
                raise SessionComplete(f"target of {self.target} labels reached")
            out = []
            for p in self.dataset.pairs:
                if p.label is None:
                    out.append(p)
                    if len(out) >= limit:
                        break
            return out

    def submit_label(self, pair_id: str, label: int, annotator: str = "") -> int:
        """Persist one label; returns the new labeled count. The dataset file
        is written before this method returns, never after."""
        with self._lock:
            if self.complete():
                raise SessionComplete(f"target of {self.target} labels reached")
            by_id = self.dataset.by_id()
            if pair_id not in by_id:
                raise UnknownPair(f"no pair with id {pair_id!r}")
            if by_id[pair_id].label is not None:
                raise AlreadyLabeled(f"pair {pair_id} already labeled")
            from .dataset import apply_labels

            updated = apply_labels(self.dataset, {pair_id: label})
            try:
                self._append_journal(pair_id, label, annotator)
                save(updated, self.path)
            except OSError as exc:
                raise StorageError(f"could not persist label: {exc}") from exc
            self.dataset = updated
            return self.labeled_count()

    def _append_journal(self, pair_id: str, label: int, annotator: str) -> None:
        entry = {"ts": time.time(), "id": pair_id, "label": label,
                 "annotator": annotator}
        journal = self.path.with_suffix(self.path.suffix + ".labels.log")
        with open(journal, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(entry) + "\n")
            fh.flush()

    def export(self) -> list:
        with self._lock:
            return self.dataset.labeled()


class LabelBody(BaseModel):
    label: str
    annotator: str = ""


def create_app(store: LabelStore, cors_origins: list[str] | None = None,
               ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="commentum annotation service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def pair_card(p, position: int) -> dict:
        return {
            "pair_id": p.id,
            "comment": p.comment.text,
            "code_context": p.code_context,
            "kind": p.comment.kind.value,
            "path": p.path,
            "line_start": p.comment.line_start,
            "position": position,
            "total": store.target,
        }

    @app.get("/pairs")
    def get_pairs(status: str = "unlabeled", limit: int = 1):
        if status != "unlabeled":
            return JSONResponse({"error": "only status=unlabeled is supported"},
                                status_code=400)
        if limit < 1:
            return JSONResponse({"error": "limit must be >= 1"}, status_code=400)
        try:
            pairs = store.next_unlabeled(limit)
        except SessionComplete:
            return JSONResponse({"error": "session_complete",
                                 "labeled": store.labeled_count(),
                                 "target": store.target}, status_code=409)
        base = store.labeled_count()
        return {"pairs": [pair_card(p, base + i + 1) for i, p in enumerate(pairs)],
                "complete": False}

    @app.post("/pairs/{pair_id}/label")
    def post_label(pair_id: str, body: LabelBody):
        if body.label not in LABEL_VALUES:
            return JSONResponse(
                {"error": f"label must be one of {sorted(LABEL_VALUES)}"},
                status_code=400)
        try:
            labeled = store.submit_label(pair_id, LABEL_VALUES[body.label],
                                         body.annotator)
        except UnknownPair:
            return JSONResponse({"error": "unknown_pair"}, status_code=404)
        except AlreadyLabeled:
            return JSONResponse({"error": "already_labeled"}, status_code=409)
        except SessionComplete:
            return JSONResponse({"error": "session_complete"}, status_code=409)
        except StorageError as exc:
            return JSONResponse({"error": f"storage: {exc}"}, status_code=500)
        return {"ok": True, "labeled": labeled, "target": store.target}

    @app.get("/progress")
    def progress():
        return {"labeled": store.labeled_count(), "target": store.target}

    @app.get("/export")
    def export():
        return {"pairs": [pair_to_row(p) for p in store.export()]}

    @app.get("/guidelines")
    def guidelines():
        return {"guidelines": GUIDELINES}

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    return app


def serve(store: LabelStore, host: str = "127.0.0.1", port: int = 8765,
          cors_origins: list[str] | None = None,
          ui_dir: str | Path | None = None) -> None:
    import uvicorn

    app = create_app(store, cors_origins, ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
