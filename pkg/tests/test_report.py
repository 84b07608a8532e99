"""Report rendering: rounding, table layout, CSV, and figure files."""

import csv
import io
import json

from commentum.evaluation import (
    AlgorithmRow,
    ComparisonReport,
    ConfusionMatrix,
    EvalResult,
    MetricSet,
)
from commentum.report import (
    report_csv,
    report_json,
    report_markdown,
    round3,
    write_report,
)


def result(acc, p, r, f1, support=40):
    cm = ConfusionMatrix(tp=1, fp=1, fn=1, tn=support - 3)
    return EvalResult(MetricSet(acc, p, r, f1, support), cm)


def sample_report():
    # rendered with the published decision-tree numbers as a format check
    row = AlgorithmRow(key="tree", label="Decision Tree")
    row.seed_result = result(0.8, 0.788, 0.736, 0.761)
    row.augmented_result = result(0.9, 0.889, 0.880, 0.885)
    row.deltas = {
        "accuracy": 0.1,
        "precision": 0.889 - 0.788,
        "recall": 0.880 - 0.736,
        "f1": 0.885 - 0.761,
    }
    partial = AlgorithmRow(key="external:ann", label="ann")
    partial.seed_result = result(0.7, 0.799, 0.799, 0.799)
    return ComparisonReport(rows=[row, partial], metadata={"split": {"seed": 42}})


def test_round3_half_up():
    assert round3(0.8615) == "0.862"  # hand-checked half-up cases
    assert round3(0.8614999) == "0.861"
    assert round3(0.0005) == "0.001"
    assert round3(1.0) == "1.000"
    assert round3(0.10050) == "0.101"


def test_markdown_columns_and_deltas():
    md = report_markdown(sample_report())
    lines = md.splitlines()
    header = next(l for l in lines if l.startswith("| Algorithm"))
    assert [c.strip() for c in header.strip("|").split("|")] == \
        ["Algorithm", "Precision", "Recall", "F1-score", "Accuracy"]
    tree_rows = [l for l in lines if l.startswith("| Decision Tree")]
    assert "| 0.788" in tree_rows[0] and "| 0.736" in tree_rows[0]
    assert "| 0.889" in tree_rows[1] and "| 0.880" in tree_rows[1]
    delta_row = tree_rows[2]
    assert "+0.101" in delta_row  # precision delta, rendered half-up
    assert "Partial rows" in md and "ann" in md


def test_markdown_is_aligned():
    md = report_markdown(sample_report())
    # every row within one table block has the same rendered width
    table: list[str] = []
    for line in md.splitlines() + [""]:
        if line.startswith("|"):
            table.append(line)
        elif table:
            assert len({len(row) for row in table}) == 1, table
            table = []


def test_csv_full_precision():
    text = report_csv(sample_report())
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["condition"] == "seed"
    assert rows[0]["precision"] == "0.788"
    assert float(rows[1]["f1"]) == 0.885
    # partial row contributes only its present condition
    assert [r["condition"] for r in rows if r["algorithm"] == "external:ann"] \
        == ["seed"]


def test_json_marks_partial_rows():
    payload = json.loads(report_json(sample_report()))
    by_key = {r["algorithm"]: r for r in payload["rows"]}
    assert not by_key["tree"]["partial"]
    assert by_key["external:ann"]["partial"]
    assert by_key["external:ann"]["augmented"] is None
    assert by_key["tree"]["seed"]["precision"] == 0.788


def test_write_report_renders_figures(tmp_path):
    written = write_report(sample_report(), tmp_path)
    for name in ("report.json", "report.md", "report.csv"):
        assert (tmp_path / name).is_file()
    figures = tmp_path / "figures"
    assert (figures / "classifier_metrics.png").stat().st_size > 1000
    assert (figures / "metric_deltas.png").stat().st_size > 1000


def test_write_report_without_figures(tmp_path):
    write_report(sample_report(), tmp_path, figures=False)
    assert not (tmp_path / "figures").exists()
