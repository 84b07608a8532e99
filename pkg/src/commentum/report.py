"""Render comparison reports: JSON, aligned markdown table, CSV, and figures.

Tables show 3 decimals (half-up) the way results tables are usually
printed; the JSON keeps full precision. Figures are written next to the
delimited outputs.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .dataset import write_atomic
from .evaluation import ComparisonReport, ConfusionMatrix, EvalResult

METRIC_KEYS = ("precision", "recall", "f1", "accuracy")
HEADERS = ("Precision", "Recall", "F1-score", "Accuracy")


def round3(value: float) -> str:
    return str(Decimal(repr(value)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def _result_json(result: EvalResult | None) -> dict | None:
    if result is None:
        return None
    m, cm = result.metrics, result.confusion
    return {
        "accuracy": m.accuracy,
        "precision": m.precision,
        "recall": m.recall,
        "f1": m.f1,
        "support": m.support,
        "confusion": {"tp": cm.tp, "fp": cm.fp, "fn": cm.fn, "tn": cm.tn},
    }


def report_json(report: ComparisonReport) -> str:
    payload = {
        "metadata": report.metadata,
        "rows": [
            {
                "algorithm": row.key,
                "label": row.label,
                "seed": _result_json(row.seed_result),
                "augmented": _result_json(row.augmented_result),
                "deltas": row.deltas,
                "partial": row.partial,
            }
            for row in report.rows
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _metric_cells(result: EvalResult) -> list[str]:
    m = result.metrics
    return [round3(m.precision), round3(m.recall), round3(m.f1), round3(m.accuracy)]


def _aligned_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
              for i in range(len(header))]
    def fmt(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    sep = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
    return "\n".join([fmt(header), sep] + [fmt(r) for r in rows])


def report_markdown(report: ComparisonReport) -> str:
    out = ["# Comment quality: seed vs augmented training data", ""]
    for title, attr in (("Seed data", "seed_result"),
                        ("Seed + generated data", "augmented_result")):
        rows = []
        for row in report.rows:
            result = getattr(row, attr)
            if result is not None:
                rows.append([row.label] + _metric_cells(result))
        out += [f"## {title}", ""]
        out.append(_aligned_table(["Algorithm"] + list(HEADERS), rows))
        out.append("")
    delta_rows = []
    for row in report.rows:
        if row.deltas is not None:
            delta_rows.append([row.label] + [
                ("+" if row.deltas[k] >= 0 else "") + round3(row.deltas[k])
                for k in METRIC_KEYS])
    out += ["## Change from augmentation (augmented - seed)", ""]
    out.append(_aligned_table(
        ["Algorithm"] + [f"{h} delta" for h in HEADERS], delta_rows))
    out.append("")
    partial = [row.label for row in report.rows if row.partial]
    if partial:
        out.append("Partial rows (one condition missing): " + ", ".join(partial))
        out.append("")
    return "\n".join(out)


def report_csv(report: ComparisonReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["algorithm", "label", "condition", "accuracy", "precision",
                     "recall", "f1", "support", "tp", "fp", "fn", "tn"])
    for row in report.rows:
        for condition, result in (("seed", row.seed_result),
                                  ("augmented", row.augmented_result)):
            if result is None:
                continue
            m, cm = result.metrics, result.confusion
            writer.writerow([row.key, row.label, condition,
                             repr(m.accuracy), repr(m.precision), repr(m.recall),
                             repr(m.f1), m.support, cm.tp, cm.fp, cm.fn, cm.tn])
    return buf.getvalue()


def render_metrics_figure(report: ComparisonReport, path: str | Path) -> None:
    """Grouped bars of P/R/F1 per algorithm, one panel per data condition."""
    conditions = [("Seed data", "seed_result"), ("Seed + generated", "augmented_result")]
    fig, axes = plt.subplots(1, 2, figsize=(12, 5), sharey=True)
    for ax, (title, attr) in zip(axes, conditions):
        rows = [(r.label, getattr(r, attr)) for r in report.rows
                if getattr(r, attr) is not None]
        labels = [name for name, _ in rows]
        x = range(len(rows))
        width = 0.27
        for offset, (metric, pretty) in enumerate(
                (("precision", "Precision"), ("recall", "Recall"), ("f1", "F1"))):
            vals = [getattr(res.metrics, metric) for _, res in rows]
            ax.bar([i + (offset - 1) * width for i in x], vals, width, label=pretty)
        ax.set_xticks(list(x))
        ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
        ax.set_ylim(0, 1.05)
        ax.set_title(title)
        ax.grid(axis="y", alpha=0.3)
    axes[0].set_ylabel("Score")
    axes[0].legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_delta_figure(report: ComparisonReport, path: str | Path) -> None:
    rows = [r for r in report.rows if r.deltas is not None]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    x = range(len(rows))
    width = 0.27
    for offset, (metric, pretty) in enumerate(
            (("precision", "Precision"), ("recall", "Recall"), ("f1", "F1"))):
        vals = [r.deltas[metric] for r in rows]
        ax.bar([i + (offset - 1) * width for i in x], vals, width, label=pretty)
    ax.axhline(0, color="black", linewidth=0.8)
    ax.set_xticks(list(x))
    ax.set_xticklabels([r.label for r in rows], rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("Metric change from augmentation")
    ax.legend(fontsize=8)
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_confusion_figure(cm: ConfusionMatrix, path: str | Path,
                            title: str = "Confusion matrix") -> None:
    grid = [[cm.tn, cm.fp], [cm.fn, cm.tp]]
    fig, ax = plt.subplots(figsize=(4, 3.6))
    im = ax.imshow(grid, cmap="Blues")
    for i in range(2):
        for j in range(2):
            ax.text(j, i, str(grid[i][j]), ha="center", va="center")
    ax.set_xticks([0, 1], labels=["Not Useful", "Useful"])
    ax.set_yticks([0, 1], labels=["Not Useful", "Useful"])
    ax.set_xlabel("Predicted")
    ax.set_ylabel("Actual")
    ax.set_title(title)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(report: ComparisonReport, out_dir: str | Path,
                 figures: bool = True) -> dict[str, Path]:
    """Write report.json / report.md / report.csv (and figures) under out_dir."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = {}
    for name, text in (("report.json", report_json(report)),
                       ("report.md", report_markdown(report)),
                       ("report.csv", report_csv(report))):
        write_atomic(out_dir / name, text)
        written[name] = out_dir / name
    if figures:
        fig_dir = out_dir / "figures"
        fig_dir.mkdir(exist_ok=True)
        render_metrics_figure(report, fig_dir / "classifier_metrics.png")
        if any(r.deltas is not None for r in report.rows):
            render_delta_figure(report, fig_dir / "metric_deltas.png")
        written["figures"] = fig_dir
    return written
