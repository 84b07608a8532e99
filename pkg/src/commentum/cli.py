"""Command-line pipeline: ingest -> extract -> label -> train -> eval/compare.

Every subcommand validates its inputs, writes its declared artifacts through
atomic renames, and drops a run manifest (resolved config + input/output
digests) next to its outputs. Exit codes: 0 success, 1 validation error,
2 runtime error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .annotate import LabelStore, serve
from .dataset import (
    Dataset,
    apply_labels,
    export_csv,
    label_stats,
    load,
    load_split,
    save,
    save_split,
    split,
    write_atomic,
)
from .errors import (
    CommentumError,
    DirNotFound,
    DuplicateId,
    InsufficientLabels,
    SchemaError,
)
from .evaluation import compare, discrepancies, evaluate
from .extractor import Source, extract_file
from .features import Scheme, Vocabulary, build_vocab_from_pairs, vectorize
from .ingest import (
    DEFAULT_SIZE_CAP,
    FixtureTransport,
    GitHubClient,
    load_sources,
    save_sources,
    scan_local,
    token_from_env,
)
from .models import (
    PRESETS,
    TRAINERS,
    TrainConfig,
    load_external_predictions,
    load_model,
    save_model,
)
from .report import render_confusion_figure, write_report


class ValidationFailure(Exception):
    """User-correctable input problem; exits 1."""


# ---------------------------------------------------------------- helpers

def _sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def _write_manifest(path: Path, command: str, config: dict,
                    inputs: list[Path], outputs: list[Path]) -> None:
    manifest = {
        "command": command,
        "config": config,
        "inputs": {str(p): _sha256_file(p) for p in inputs if p.is_file()},
        "outputs": {str(p): _sha256_file(p) for p in outputs if p.is_file()},
        "versions": {"commentum": __version__,
                     "python": sys.version.split()[0]},
        "created_at": time.time(),
    }
    write_atomic(path, json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    p = Path(path)
    if not p.is_file():
        raise ValidationFailure(f"config file not found: {p}")
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    with open(p, "rb") as fh:
        return tomllib.load(fh)


def _cfg(config: dict, section: str, key: str, cli_value, default):
    """CLI flag wins, then the config file section, then the default."""
    if cli_value is not None:
        return cli_value
    return config.get(section, {}).get(key, default)


def _load_dataset(path: str, what: str = "dataset") -> Dataset:
    p = Path(path)
    if not p.is_file():
        raise ValidationFailure(f"{what} file not found: {p}")
    return load(p)


def _require_two_classes(ds: Dataset, context: str) -> None:
    n_useful, n_not, _ = label_stats(ds)
    if n_useful < 1 or n_not < 1:
        raise ValidationFailure(
            f"{context} needs at least one labeled pair per class "
            f"(have {n_useful} useful / {n_not} not useful); "
            f"run `commentum label` to label pairs first")


def _scheme(value: str) -> Scheme:
    try:
        return Scheme(value)
    except ValueError:
        raise ValidationFailure(f"unknown scheme {value!r}; use count or tfidf")


# ---------------------------------------------------------------- ingest

def cmd_ingest(args) -> int:
    config = _load_config(args.config)
    out = Path(args.out)
    size_cap = _cfg(config, "ingest", "size_cap", args.size_cap, DEFAULT_SIZE_CAP)

    if args.local:
        files, skipped = scan_local(args.local, size_cap=size_cap)
    else:
        token = args.token or token_from_env()
        transport = FixtureTransport(args.fixtures) if args.fixtures else None
        if transport is None and not token:
            raise ValidationFailure(
                "GitHub mode needs a token (COMMENTUM_GITHUB_TOKEN) "
                "or --fixtures for recorded replay")
        client = GitHubClient(token, transport=transport, size_cap=size_cap)
        if args.repos:
            repo_ids = [r.strip() for r in args.repos.split(",") if r.strip()]
        elif args.query:
            repo_ids = client.search_repos(args.query, args.max_repos)
        else:
            raise ValidationFailure("need --local, --repos, or --query")
        files, skipped = [], []
        for repo_id in repo_ids:
            refs = client.list_c_files(repo_id)
            if args.max_files:
                refs = refs[: args.max_files]
            got, missed = client.fetch_files(repo_id, refs, args.parallelism)
            files.extend(got)
            skipped.extend(missed)

    save_sources(files, out)
    for s in skipped:
        print(f"skipped {s.path}: {s.reason}", file=sys.stderr)
    print(f"wrote {len(files)} source files to {out}")
    _write_manifest(out.with_suffix(out.suffix + ".manifest.json"), "ingest",
                    {"local": args.local, "query": args.query,
                     "repos": args.repos, "max_repos": args.max_repos,
                     "max_files": args.max_files, "size_cap": size_cap,
                     "fixtures": args.fixtures},
                    [], [out])
    return 0


# ---------------------------------------------------------------- extract

def cmd_extract(args) -> int:
    config = _load_config(args.config)
    context_lines = _cfg(config, "extract", "context_lines", args.context_lines, 3)
    max_gap = _cfg(config, "extract", "max_gap", args.max_gap, 0)
    merge_runs = not args.no_merge
    in_path = Path(args.input)
    out = Path(args.out)

    if in_path.is_dir():
        sources, skipped = scan_local(in_path)
        for s in skipped:
            print(f"skipped {s.path}: {s.reason}", file=sys.stderr)
    elif in_path.is_file():
        sources = load_sources(in_path)
    else:
        raise ValidationFailure(f"input not found: {in_path}")

    source_tag = Source(args.source)
    all_pairs = []
    n_warnings = 0
    for sf in sources:
        pairs, warnings = extract_file(
            sf.content, sf.path, sf.repo_id, context_lines,
            merge=merge_runs, max_gap=max_gap, source=source_tag)
        all_pairs.extend(pairs)
        for w in warnings:
            n_warnings += 1
            print(f"{sf.path}:{w.line}: {w.message}", file=sys.stderr)
    all_pairs.sort(key=lambda p: (p.repo_id, p.path, p.comment.line_start))

    ds = Dataset(pairs=all_pairs, name=out.stem, created_at=time.time())
    save(ds, out)
    if args.csv:
        export_csv(ds, Path(args.csv))
    print(f"extracted {len(all_pairs)} pairs from {len(sources)} files "
          f"({n_warnings} lexer warnings)")
    _write_manifest(out.with_suffix(out.suffix + ".manifest.json"), "extract",
                    {"input": str(in_path), "context_lines": context_lines,
                     "merge": merge_runs, "max_gap": max_gap,
                     "source": args.source},
                    [in_path] if in_path.is_file() else [],
                    [out] + ([Path(args.csv)] if args.csv else []))
    return 0


# ---------------------------------------------------------------- label

def _parse_label_value(value) -> int:
    if value in (0, 1):
        return int(value)
    if isinstance(value, str):
        lowered = value.strip().lower()
        if lowered in ("useful", "1"):
            return 1
        if lowered in ("not_useful", "not useful", "0"):
            return 0
    raise ValidationFailure(f"bad label value {value!r}")


def _load_label_file(path: Path) -> dict[str, int]:
    labels: dict[str, int] = {}
    if path.suffix == ".csv":
        import csv as _csv

        with open(path, encoding="utf-8", newline="") as fh:
            for row in _csv.DictReader(fh):
                labels[row["id"]] = _parse_label_value(row["label"])
        return labels
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                row = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"invalid JSON: {exc.msg}", line=lineno) from exc
            if "id" not in row or "label" not in row:
                raise SchemaError("label rows need id and label", line=lineno)
            labels[row["id"]] = _parse_label_value(row["label"])
    return labels


def _tty_label_loop(store: LabelStore) -> None:
    print("U = Useful, N = Not Useful, S = skip, Q = quit", flush=True)
    skipped: set[str] = set()
    while not store.complete():
        batch = [p for p in store.next_unlabeled(limit=len(skipped) + 1)
                 if p.id not in skipped]
        if not batch:
            break
        pair = batch[0]
        labeled = store.labeled_count()
        print(f"\n[{labeled + 1}/{store.target}] {pair.path}:{pair.comment.line_start}")
        print(f"  comment: {pair.comment.text}")
        ctx = pair.code_context or "(no code in window)"
        print("  context: " + ctx.replace("\n", "\n           "))
        answer = input("label [u/n/s/q]: ").strip().lower()
        if answer == "q":
            break
        if answer == "u":
            store.submit_label(pair.id, 1, annotator="tty")
        elif answer == "n":
            store.submit_label(pair.id, 0, annotator="tty")
        else:
            skipped.add(pair.id)
    labeled = store.labeled_count()
    print(f"\nlabeled {labeled}/{store.target}")


def cmd_label(args) -> int:
    config = _load_config(args.config)
    dataset_path = Path(args.dataset)
    if not dataset_path.is_file():
        raise ValidationFailure(f"dataset file not found: {dataset_path}")

    if args.import_file:
        ds = load(dataset_path)
        labels = _load_label_file(Path(args.import_file))
        unknown = [pid for pid in labels if pid not in ds.by_id()]
        if unknown:
            raise ValidationFailure(
                f"{len(unknown)} label ids not in dataset, first: {unknown[0]}")
        try:
            ds = apply_labels(ds, labels, force=args.force_relabel)
        except ValueError as exc:
            raise ValidationFailure(str(exc))
        save(ds, dataset_path)
        n_useful, n_not, n_unlabeled = label_stats(ds)
        print(f"applied {len(labels)} labels: {n_useful} useful, "
              f"{n_not} not useful, {n_unlabeled} unlabeled")
        _write_manifest(dataset_path.with_suffix(".labels.manifest.json"), "label",
                        {"import": args.import_file,
                         "force_relabel": args.force_relabel},
                        [Path(args.import_file)], [dataset_path])
        return 0

    target = _cfg(config, "label", "target", args.target, 100)
    store = LabelStore(dataset_path, target_count=target)
    if args.tty:
        _tty_label_loop(store)
        return 0
    ui_dir = args.ui_dir
    if ui_dir is None:
        bundled = Path(__file__).resolve().parents[2] / "frontend" / "dist"
        ui_dir = str(bundled) if bundled.is_dir() else None
    url = f"http://{args.host}:{args.port}/"
    if ui_dir:
        print(f"annotation UI: {url}")
    else:
        print(f"annotation API: {url} (no UI build found; "
              f"use the frontend dev server or --tty)")
    serve(store, host=args.host, port=args.port,
          cors_origins=args.cors_origin or None, ui_dir=ui_dir)
    return 0


# ---------------------------------------------------------------- train

_ALGO_KWARG_FLAGS = {
    "nb": ("alpha",),
    "tree": ("max_depth", "min_leaf"),
    "forest": ("n_trees", "feature_frac", "max_depth", "min_leaf", "seed"),
    "knn": ("k",),
}


def _algo_config(args, config: dict, algorithm: str) -> dict:
    section = config.get("train", {}).get(algorithm, {})
    out = dict(section)
    if algorithm in ("logreg", "svm"):
        preset = PRESETS[args.preset] if args.preset else TrainConfig()
        for name in ("learning_rate", "batch_size", "grad_accum", "epochs", "l2"):
            cli = getattr(args, name, None)
            out.setdefault(name, getattr(preset, name))
            if cli is not None:
                out[name] = cli
        if args.seed_rng is not None:
            out["seed"] = args.seed_rng
        out.setdefault("seed", 0)
        return out
    for name in _ALGO_KWARG_FLAGS.get(algorithm, ()):
        cli = getattr(args, name, None)
        if cli is not None:
            out[name] = cli
    if algorithm == "forest" and args.seed_rng is not None:
        out["seed"] = args.seed_rng
    return out


def _train_model(algorithm: str, pairs, vocab, scheme, algo_cfg: dict):
    vectors = [vectorize(p, vocab, scheme) for p in pairs]
    labels = [p.label for p in pairs]
    if algorithm in ("logreg", "svm"):
        return TRAINERS[algorithm](vectors, labels, vocab, TrainConfig(**algo_cfg))
    return TRAINERS[algorithm](vectors, labels, vocab, **algo_cfg)


def cmd_train(args) -> int:
    config = _load_config(args.config)
    ds = _load_dataset(args.dataset)
    _require_two_classes(ds, "training")
    scheme = _scheme(_cfg(config, "featurize", "scheme", args.scheme, "tfidf"))
    min_df = _cfg(config, "featurize", "min_df", args.min_df, 2)
    max_terms = _cfg(config, "featurize", "max_terms", args.max_terms, 20000)

    labeled = ds.labeled()
    if args.split:
        assignment = load_split(Path(args.split))
        train_pairs = [p for p in labeled if p.id in assignment.train_ids]
    elif args.ratio is not None:
        seed_rng = args.seed_rng if args.seed_rng is not None else 42
        assignment = split(ds, args.ratio, seed_rng)
        if args.split_out:
            save_split(assignment, Path(args.split_out))
        train_pairs = [p for p in labeled if p.id in assignment.train_ids]
    else:
        train_pairs = labeled

    if not train_pairs:
        raise ValidationFailure("no labeled training pairs; run `commentum label`")

    algo_cfg = _algo_config(args, config, args.algorithm)
    vocab = build_vocab_from_pairs(train_pairs, min_df=min_df, max_terms=max_terms)
    model = _train_model(args.algorithm, train_pairs, vocab, scheme, algo_cfg)

    out = Path(args.out)
    save_model(model, out)
    vocab_out = Path(args.vocab_out) if args.vocab_out else out.with_suffix(".vocab.json")
    vocab.save(vocab_out)
    print(f"trained {args.algorithm} on {len(train_pairs)} pairs "
          f"(vocab {len(vocab)} terms) -> {out}")
    _write_manifest(out.with_suffix(out.suffix + ".manifest.json"), "train",
                    {"dataset": args.dataset, "algorithm": args.algorithm,
                     "scheme": scheme.value, "min_df": min_df,
                     "max_terms": max_terms, "algo_config": algo_cfg,
                     "split": args.split, "ratio": args.ratio,
                     "split_out": args.split_out},
                    [Path(args.dataset)],
                    [out, vocab_out] + ([Path(args.split_out)]
                                        if args.ratio is not None and args.split_out else []))
    return 0


# ---------------------------------------------------------------- eval

def cmd_eval(args) -> int:
    config = _load_config(args.config)
    ds = _load_dataset(args.dataset)
    if not args.split:
        raise ValidationFailure("eval needs --split (produced by `commentum train`)")
    assignment = load_split(Path(args.split))
    scheme = _scheme(_cfg(config, "featurize", "scheme", args.scheme, "tfidf"))

    if args.external:
        model = load_external_predictions(Path(args.external))
        result = evaluate(model, ds, assignment)
        name = f"external:{model.name}"
    else:
        if not args.model:
            raise ValidationFailure("eval needs --model or --external")
        model = load_model(Path(args.model))
        vocab_path = Path(args.vocab) if args.vocab else Path(args.model).with_suffix(".vocab.json")
        if not vocab_path.is_file():
            raise ValidationFailure(f"vocabulary file not found: {vocab_path}")
        vocab = Vocabulary.load(vocab_path)
        result = evaluate(model, ds, assignment, vocab, scheme)
        name = model.algorithm

    m, cm = result.metrics, result.confusion
    payload = {
        "model": name,
        "metrics": {"accuracy": m.accuracy, "precision": m.precision,
                    "recall": m.recall, "f1": m.f1, "support": m.support},
        "confusion": {"tp": cm.tp, "fp": cm.fp, "fn": cm.fn, "tn": cm.tn},
    }
    out = Path(args.out)
    write_atomic(out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    if args.figure:
        render_confusion_figure(cm, Path(args.figure), title=name)
    print(f"{name}: acc={m.accuracy:.3f} p={m.precision:.3f} "
          f"r={m.recall:.3f} f1={m.f1:.3f} (n={m.support})")
    _write_manifest(out.with_suffix(out.suffix + ".manifest.json"), "eval",
                    {"dataset": args.dataset, "model": args.model,
                     "external": args.external, "split": args.split,
                     "scheme": scheme.value},
                    [p for p in (Path(args.dataset), Path(args.split)) if p],
                    [out] + ([Path(args.figure)] if args.figure else []))
    return 0


# ---------------------------------------------------------------- compare

def _parse_external(specs: list[str]) -> dict:
    out = {}
    for entry in specs:
        if "=" not in entry:
            raise ValidationFailure(
                f"bad --external {entry!r}; expected name=seed.jsonl[:augmented.jsonl]")
        name, _, paths = entry.partition("=")
        seed_path, _, aug_path = paths.partition(":")
        pred_seed = load_external_predictions(Path(seed_path)) if seed_path else None
        pred_aug = load_external_predictions(Path(aug_path)) if aug_path else None
        out[name] = (pred_seed, pred_aug)
    return out


def cmd_compare(args) -> int:
    config = _load_config(args.config)
    seed_ds = _load_dataset(args.seed, "seed dataset")
    _require_two_classes(seed_ds, "comparison")
    if args.generated:
        generated_ds = _load_dataset(args.generated, "generated dataset")
    else:
        generated_ds = Dataset(pairs=[], name="empty")

    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in TRAINERS:
            raise ValidationFailure(
                f"unknown algorithm {a!r}; choose from {sorted(TRAINERS)}")
    ratio = _cfg(config, "split", "ratio", args.ratio, 0.2)
    seed_rng = _cfg(config, "split", "seed", args.seed_rng, 42)
    scheme = _scheme(_cfg(config, "featurize", "scheme", args.scheme, "tfidf"))
    min_df = _cfg(config, "featurize", "min_df", args.min_df, 2)
    max_terms = _cfg(config, "featurize", "max_terms", args.max_terms, 20000)
    algo_configs = {a: dict(config.get("train", {}).get(a, {})) for a in algorithms}

    report = compare(
        algorithms, seed_ds, generated_ds,
        ratio=ratio, split_seed=seed_rng,
        algo_configs=algo_configs, scheme=scheme,
        min_df=min_df, max_terms=max_terms,
        external=_parse_external(args.external or []),
    )
    out_dir = Path(args.out_dir)
    written = write_report(report, out_dir, figures=not args.no_figures)
    print(f"wrote comparison report for {len(report.rows)} algorithms to {out_dir}")
    _write_manifest(out_dir / "run_manifest.json", "compare",
                    {"seed": args.seed, "generated": args.generated,
                     "algorithms": algorithms, "ratio": ratio,
                     "seed_rng": seed_rng, "scheme": scheme.value,
                     "min_df": min_df, "max_terms": max_terms,
                     "algo_configs": algo_configs},
                    [Path(args.seed)] + ([Path(args.generated)] if args.generated else []),
                    [p for p in written.values() if isinstance(p, Path) and p.is_file()])
    return 0


# ---------------------------------------------------------------- discrepancies

def cmd_discrepancies(args) -> int:
    config = _load_config(args.config)
    ds = _load_dataset(args.dataset)
    scheme = _scheme(_cfg(config, "featurize", "scheme", args.scheme, "tfidf"))
    labeled = ds.labeled()
    if not labeled:
        raise ValidationFailure("no labeled pairs; run `commentum label`")

    if args.external:
        model = load_external_predictions(Path(args.external))
        rows = discrepancies(labeled, model)
    else:
        if not args.model:
            raise ValidationFailure("discrepancies needs --model or --external")
        model = load_model(Path(args.model))
        vocab_path = Path(args.vocab) if args.vocab else Path(args.model).with_suffix(".vocab.json")
        vocab = Vocabulary.load(vocab_path)
        rows = discrepancies(labeled, model, vocab, scheme)

    out = Path(args.out)
    lines = [json.dumps({"pair_id": d.pair_id, "manual_label": d.manual_label,
                         "predicted_label": d.predicted_label, "score": d.score})
             for d in rows]
    write_atomic(out, "\n".join(lines) + ("\n" if lines else ""))
    print(f"{len(rows)} disagreements out of {len(labeled)} labeled pairs -> {out}")
    _write_manifest(out.with_suffix(out.suffix + ".manifest.json"), "discrepancies",
                    {"dataset": args.dataset, "model": args.model,
                     "external": args.external},
                    [Path(args.dataset)], [out])
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commentum",
        description="C code-comment extraction and comment-quality classification")
    parser.add_argument("--config", help="TOML config file with shared defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="collect .c files from GitHub or a directory")
    p.add_argument("--local", help="scan a local directory tree")
    p.add_argument("--query", help="GitHub repository search query")
    p.add_argument("--repos", help="comma-separated owner/name list")
    p.add_argument("--max-repos", type=int, default=5)
    p.add_argument("--max-files", type=int, default=0)
    p.add_argument("--parallelism", type=int, default=4)
    p.add_argument("--size-cap", type=int, default=None)
    p.add_argument("--token", default="")
    p.add_argument("--fixtures", help="recorded HTTP exchange directory (offline)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("extract", help="extract code-comment pairs from C sources")
    p.add_argument("--in", dest="input", required=True,
                   help="sources.jsonl from ingest, or a directory of .c files")
    p.add_argument("--out", required=True)
    p.add_argument("--csv", help="also export the pairs as CSV")
    p.add_argument("--context-lines", type=int, default=None)
    p.add_argument("--max-gap", type=int, default=None)
    p.add_argument("--no-merge", action="store_true",
                   help="keep adjacent single-line comments separate")
    p.add_argument("--source", choices=["seed", "generated"], default="seed")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("label", help="label pairs: HTTP service, terminal, or import")
    p.add_argument("--dataset", required=True)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--tty", action="store_true", help="label inline in the terminal")
    p.add_argument("--import", dest="import_file",
                   help="apply labels from a JSONL/CSV file of {id, label}")
    p.add_argument("--force-relabel", action="store_true")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--cors-origin", action="append")
    p.add_argument("--ui-dir", help="serve a built annotation UI from this directory")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("train", help="train one classifier on labeled pairs")
    p.add_argument("--dataset", required=True)
    p.add_argument("--algorithm", required=True, choices=sorted(TRAINERS))
    p.add_argument("--out", required=True)
    p.add_argument("--vocab-out")
    p.add_argument("--split", help="existing split file (train side is used)")
    p.add_argument("--ratio", type=float, help="draw a fresh split with this test ratio")
    p.add_argument("--split-out", help="write the drawn split here")
    p.add_argument("--seed-rng", type=int, default=None)
    p.add_argument("--scheme", default=None)
    p.add_argument("--min-df", type=int, default=None)
    p.add_argument("--max-terms", type=int, default=None)
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--learning-rate", dest="learning_rate", type=float)
    p.add_argument("--batch-size", dest="batch_size", type=int)
    p.add_argument("--grad-accum", dest="grad_accum", type=int)
    p.add_argument("--epochs", type=int)
    p.add_argument("--l2", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--max-depth", dest="max_depth", type=int)
    p.add_argument("--min-leaf", dest="min_leaf", type=int)
    p.add_argument("--n-trees", dest="n_trees", type=int)
    p.add_argument("--feature-frac", dest="feature_frac", type=float)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="evaluate a model on the test split")
    p.add_argument("--dataset", required=True)
    p.add_argument("--split", required=True)
    p.add_argument("--model")
    p.add_argument("--vocab")
    p.add_argument("--external", help="JSONL of {id, score} from an external model")
    p.add_argument("--out", required=True)
    p.add_argument("--figure", help="write a confusion-matrix figure here")
    p.add_argument("--scheme", default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compare", help="seed vs seed+generated comparison report")
    p.add_argument("--seed", required=True, help="seed dataset JSONL")
    p.add_argument("--generated", help="generated dataset JSONL (labeled)")
    p.add_argument("--algorithms", required=True,
                   help="comma-separated, e.g. nb,logreg,svm,tree")
    p.add_argument("--ratio", type=float, default=None)
    p.add_argument("--seed-rng", type=int, default=None)
    p.add_argument("--scheme", default=None)
    p.add_argument("--min-df", type=int, default=None)
    p.add_argument("--max-terms", type=int, default=None)
    p.add_argument("--external", action="append",
                   help="name=seed_preds.jsonl[:augmented_preds.jsonl]")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("discrepancies",
                       help="pairs where the model contradicts manual labels")
    p.add_argument("--dataset", required=True)
    p.add_argument("--model")
    p.add_argument("--vocab")
    p.add_argument("--external")
    p.add_argument("--out", required=True)
    p.add_argument("--scheme", default=None)
    p.set_defaults(func=cmd_discrepancies)

    return parser


VALIDATION_ERRORS = (ValidationFailure, SchemaError, DuplicateId,
                     InsufficientLabels, DirNotFound)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 130
    except CommentumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - surface anything unexpected as exit 2
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
