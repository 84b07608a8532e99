#!/usr/bin/env python3
"""Regenerate the extraction golden files from the fixture corpus.

Only run after hand-reviewing the extractor's output on every fixture;
the committed goldens are the reviewed reference, not a moving target.
"""

import time
from pathlib import Path

from commentum.dataset import Dataset, save
from commentum.extractor import extract_file

ROOT = Path(__file__).resolve().parents[1]


def build(merge: bool) -> Dataset:
    pairs = []
    for f in sorted((ROOT / "test-data" / "fixtures").glob("*.c")):
        content = f.read_bytes().decode("utf-8")
        got, _ = extract_file(content, f.name, merge=merge)
        pairs.extend(got)
    return Dataset(pairs=pairs, name="fixtures", created_at=time.time())


def main() -> None:
    golden_dir = ROOT / "test-data" / "golden"
    golden_dir.mkdir(parents=True, exist_ok=True)
    raw = build(merge=False)
    merged = build(merge=True)
    save(raw, golden_dir / "fixtures_raw.jsonl")
    save(merged, golden_dir / "fixtures_merged.jsonl")
    print(f"froze {len(raw)} raw pairs, {len(merged)} merged pairs")


if __name__ == "__main__":
    main()
