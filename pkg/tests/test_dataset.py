"""Dataset persistence, splitting, merging, and label bookkeeping."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commentum.dataset import (
    Dataset,
    apply_labels,
    duplicate_key,
    export_csv,
    label_stats,
    load,
    load_split,
    merge,
    pair_to_row,
    save,
    save_split,
    split,
)
from commentum.errors import (
    DuplicateId,
    InsufficientLabels,
    SchemaError,
    UnlabeledGenerated,
)
from commentum.extractor import CodeCommentPair, CommentKind, RawComment, Source

_text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",)), min_size=0, max_size=40)


@st.composite
def pair_strategy(draw, source=None, label=None):
    kind = draw(st.sampled_from([CommentKind.SINGLE, CommentKind.MULTI]))
    line_start = draw(st.integers(min_value=1, max_value=500))
    line_end = line_start + draw(st.integers(min_value=0, max_value=5))
    comment = RawComment(
        kind=kind,
        text=draw(_text.filter(bool)),
        line_start=line_start,
        line_end=line_end,
        trailing=draw(st.booleans()),
    )
    return CodeCommentPair(
        id=draw(st.uuids()).hex[:16],
        repo_id=draw(st.sampled_from(["", "acme/lib", "kernel/core"])),
        path=draw(st.sampled_from(["a.c", "src/b.c", "deep/dir/c.c"])),
        comment=comment,
        code_context=draw(_text),
        label=label if label is not None else draw(st.sampled_from([0, 1, None])),
        source=source or draw(st.sampled_from([Source.SEED, Source.GENERATED])),
        generator=draw(st.sampled_from([None, "genA"])),
    )


@st.composite
def dataset_strategy(draw, min_size=0, max_size=12, **pair_kwargs):
    pairs = draw(st.lists(pair_strategy(**pair_kwargs),
                          min_size=min_size, max_size=max_size,
                          unique_by=lambda p: p.id))
    return Dataset(pairs=pairs, name="gen")


def make_pair(i, label=None, source=Source.SEED, text=None, ctx="int x;"):
    comment = RawComment(CommentKind.SINGLE, text or f"note {i}", i + 1, i + 1, False)
    return CodeCommentPair(
        id=f"{i:016x}", repo_id="", path="f.c", comment=comment,
        code_context=ctx, label=label, source=source)


def make_dataset(n, useful=0, not_useful=0, source=Source.SEED):
    pairs = []
    for i in range(n):
        label = 1 if i < useful else (0 if i < useful + not_useful else None)
        pairs.append(make_pair(i, label=label, source=source))
    return Dataset(pairs=pairs, name="synthetic")


# ---------------------------------------------------------------- save/load

@settings(max_examples=60, deadline=None)
@given(dataset_strategy())
def test_save_load_round_trip(tmp_path_factory, ds):
    path = tmp_path_factory.mktemp("ds") / "pairs.jsonl"
    save(ds, path)
    assert load(path).pairs == ds.pairs


def test_missing_key_reports_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    row = pair_to_row(make_pair(1))
    del row["comment"]
    path.write_text(json.dumps(row) + "\n")
    with pytest.raises(SchemaError) as err:
        load(path)
    assert err.value.line == 1
    assert err.value.field == "comment"


def test_unknown_key_rejected(tmp_path):
    path = tmp_path / "bad.jsonl"
    row = pair_to_row(make_pair(1))
    row["surprise"] = True
    path.write_text(json.dumps(row) + "\n")
    with pytest.raises(SchemaError) as err:
        load(path)
    assert err.value.field == "surprise"


def test_duplicate_id_rejected(tmp_path):
    path = tmp_path / "dup.jsonl"
    row = json.dumps(pair_to_row(make_pair(1)))
    path.write_text(row + "\n" + row + "\n")
    with pytest.raises(DuplicateId):
        load(path)


def test_csv_export_has_same_columns(tmp_path):
    ds = make_dataset(4, useful=2, not_useful=1)
    out = tmp_path / "pairs.csv"
    export_csv(ds, out)
    header = out.read_text().splitlines()[0]
    assert header.split(",") == list(pair_to_row(make_pair(1)).keys())
    assert len(out.read_text().splitlines()) == 5


# ---------------------------------------------------------------- split

def test_split_sizes_small():
    ds = make_dataset(10, useful=6, not_useful=4)
    a = split(ds, ratio=0.2, seed=7)
    assert len(a.test_ids) == 2  # one per class by per-class rounding
    assert len(a.train_ids) == 8
    assert a.train_ids | a.test_ids == {p.id for p in ds.labeled()}
    assert not (a.train_ids & a.test_ids)


def test_split_is_stratified():
    ds = make_dataset(100, useful=60, not_useful=40)
    a = split(ds, ratio=0.2, seed=3)
    by_id = ds.by_id()
    test_useful = sum(1 for pid in a.test_ids if by_id[pid].label == 1)
    assert test_useful == 12  # round(0.2 * 60)
    assert len(a.test_ids) - test_useful == 8


def test_split_9048_yields_1810():
    ds = make_dataset(9048, useful=5000, not_useful=4048)
    a = split(ds, ratio=0.2, seed=1)
    assert len(a.test_ids) == 1810
    assert len(a.train_ids) == 7238


def test_split_deterministic_and_seed_sensitive():
    ds = make_dataset(40, useful=22, not_useful=18)
    a1 = split(ds, 0.2, seed=1)
    a2 = split(ds, 0.2, seed=1)
    b = split(ds, 0.2, seed=2)
    assert a1 == a2
    assert a1.test_ids != b.test_ids
    assert len(a1.test_ids) == len(b.test_ids)


def test_split_ignores_unlabeled():
    ds = make_dataset(30, useful=10, not_useful=10)  # 10 unlabeled
    a = split(ds, 0.25, seed=0)
    labeled_ids = {p.id for p in ds.labeled()}
    assert a.train_ids | a.test_ids == labeled_ids


def test_split_requires_two_per_class():
    ds = make_dataset(5, useful=4, not_useful=1)
    with pytest.raises(InsufficientLabels):
        split(ds, 0.2, seed=0)


def test_split_round_trip(tmp_path):
    ds = make_dataset(12, useful=7, not_useful=5)
    a = split(ds, 0.25, seed=9)
    path = tmp_path / "split.json"
    save_split(a, path)
    assert load_split(path) == a


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=40), st.integers(min_value=2, max_value=40),
       st.integers(min_value=0, max_value=2**31))
def test_split_class_fraction_property(n_useful, n_not, seed):
    ds = make_dataset(n_useful + n_not, useful=n_useful, not_useful=n_not)
    a = split(ds, 0.2, seed=seed)
    by_id = ds.by_id()
    for cls, size in ((1, n_useful), (0, n_not)):
        in_test = sum(1 for pid in a.test_ids if by_id[pid].label == cls)
        assert abs(in_test / size - 0.2) <= 1.0 / size + 1e-12


# ---------------------------------------------------------------- merge

def test_merge_concatenates_and_counts():
    seed_ds = make_dataset(6, useful=3, not_useful=3)
    gen = Dataset(pairs=[make_pair(100 + i, label=i % 2, source=Source.GENERATED)
                         for i in range(4)], name="gen")
    merged = merge(seed_ds, gen)
    assert len(merged) == 10


def test_merge_requires_labels():
    seed_ds = make_dataset(2, useful=1, not_useful=1)
    gen = Dataset(pairs=[make_pair(50, label=None, source=Source.GENERATED)])
    with pytest.raises(UnlabeledGenerated):
        merge(seed_ds, gen)


def test_merge_dedupes_and_seed_wins():
    seed_pair = make_pair(1, label=1)
    # same comment and context up to case/whitespace -> duplicate
    dup = make_pair(99, label=0, source=Source.GENERATED,
                    text="NOTE  1", ctx="int   x;")
    assert duplicate_key(seed_pair) == duplicate_key(dup)
    seed_ds = Dataset(pairs=[seed_pair, make_pair(2, label=0)])
    merged = merge(seed_ds, Dataset(pairs=[dup]))
    assert len(merged) == 2
    assert merged.by_id()[seed_pair.id].label == 1


def test_merge_idempotent():
    seed_ds = make_dataset(4, useful=2, not_useful=2)
    gen = Dataset(pairs=[make_pair(10 + i, label=1, source=Source.GENERATED)
                         for i in range(3)])
    once = merge(seed_ds, gen)
    again = merge(once, Dataset(pairs=[], name="empty"))
    assert again.pairs == once.pairs


def test_merge_rejects_seed_tagged_generated():
    seed_ds = make_dataset(2, useful=1, not_useful=1)
    bad = Dataset(pairs=[make_pair(9, label=1, source=Source.SEED)])
    with pytest.raises(ValueError):
        merge(seed_ds, bad)


# ---------------------------------------------------------------- labels

def test_label_stats_counts():
    assert label_stats(Dataset(pairs=[])) == (0, 0, 0)
    ds = make_dataset(9048, useful=60, not_useful=40)
    assert label_stats(ds) == (60, 40, 8948)
    all_useful = make_dataset(5, useful=5)
    assert label_stats(all_useful) == (5, 0, 0)


def test_apply_labels_guards_relabeling():
    ds = make_dataset(3, useful=1)
    target = ds.pairs[0].id
    with pytest.raises(ValueError):
        apply_labels(ds, {target: 0})
    forced = apply_labels(ds, {target: 0}, force=True)
    assert forced.by_id()[target].label == 0
    same = apply_labels(ds, {target: 1})  # same value is a no-op, not an error
    assert same.by_id()[target].label == 1


def test_apply_labels_unknown_id():
    ds = make_dataset(2)
    with pytest.raises(KeyError):
        apply_labels(ds, {"missing": 1})
