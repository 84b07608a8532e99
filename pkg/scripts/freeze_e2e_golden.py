#!/usr/bin/env python3
"""Run the bundled-corpus pipeline once and freeze its outputs as goldens.

Regenerate only when the pipeline's intended behavior changes, and review
the diff of the frozen report before committing it.
"""

import hashlib
import json
import shutil
import tempfile
from pathlib import Path

from commentum.cli import main

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "test-data" / "golden"


def sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def run(workdir: Path) -> dict:
    pairs = workdir / "pairs.jsonl"
    assert main(["extract", "--in", str(ROOT / "test-data" / "corpus"),
                 "--out", str(pairs)]) == 0
    extract_digest = sha256(pairs)
    assert main(["label", "--dataset", str(pairs),
                 "--import", str(ROOT / "test-data" / "corpus_labels.jsonl")]) == 0
    labeled_digest = sha256(pairs)
    for algo in ("nb", "logreg", "svm", "tree"):
        assert main(["train", "--dataset", str(pairs), "--algorithm", algo,
                     "--out", str(workdir / f"{algo}.json"),
                     "--split", str(workdir / "split.json")] if algo != "nb" else
                    ["train", "--dataset", str(pairs), "--algorithm", "nb",
                     "--out", str(workdir / "nb.json"),
                     "--ratio", "0.2", "--seed-rng", "42",
                     "--split-out", str(workdir / "split.json")]) == 0
    assert main(["compare", "--seed", str(pairs),
                 "--generated", str(ROOT / "test-data" / "generated_pairs.jsonl"),
                 "--algorithms", "nb,logreg,svm,tree",
                 "--seed-rng", "42",
                 "--out-dir", str(workdir / "report")]) == 0
    return {"extract_sha256": extract_digest, "labeled_sha256": labeled_digest}


def main_freeze() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        workdir = Path(tmp)
        digests = run(workdir)
        for name in ("report.json", "report.md", "report.csv"):
            shutil.copyfile(workdir / "report" / name, GOLDEN / name)
        (GOLDEN / "corpus_digests.json").write_text(
            json.dumps(digests, indent=2) + "\n")
    print("frozen:", json.dumps(digests, indent=2))


if __name__ == "__main__":
    main_freeze()
