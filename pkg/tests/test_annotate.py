"""Labeling service: ordering, persistence-before-ack, race rules."""

import json

import pytest
from fastapi.testclient import TestClient

from commentum.annotate import GUIDELINES, LabelStore, create_app
from commentum.dataset import load, save
from commentum.errors import SessionComplete
from test_dataset import make_dataset


@pytest.fixture()
def store_path(tmp_path):
    path = tmp_path / "pairs.jsonl"
    save(make_dataset(12), path)
    return path


@pytest.fixture()
def client(store_path):
    store = LabelStore(store_path, target_count=10)
    return TestClient(create_app(store)), store, store_path


def test_pairs_served_in_dataset_order(client):
    http, store, _ = client
    resp = http.get("/pairs", params={"status": "unlabeled", "limit": 3})
    assert resp.status_code == 200
    cards = resp.json()["pairs"]
    assert [c["position"] for c in cards] == [1, 2, 3]
    assert cards[0]["total"] == 10
    dataset_order = [p.id for p in store.dataset.pairs[:3]]
    assert [c["pair_id"] for c in cards] == dataset_order


def test_label_persisted_before_ack(client):
    http, store, path = client
    first = store.dataset.pairs[0].id
    resp = http.post(f"/pairs/{first}/label",
                     json={"label": "useful", "annotator": "t"})
    assert resp.status_code == 200
    assert resp.json() == {"ok": True, "labeled": 1, "target": 10}
    # the on-disk dataset already carries the label
    assert load(path).by_id()[first].label == 1
    journal = path.with_suffix(path.suffix + ".labels.log")
    entries = [json.loads(l) for l in journal.read_text().splitlines()]
    assert entries[-1]["id"] == first and entries[-1]["annotator"] == "t"


def test_restart_reports_persisted_labels(client):
    http, store, path = client
    ids = [p.id for p in store.dataset.pairs[:4]]
    for pid in ids:
        assert http.post(f"/pairs/{pid}/label",
                         json={"label": "not_useful"}).status_code == 200
    revived = LabelStore(path, target_count=10)
    assert revived.labeled_count() == 4
    next_up = revived.next_unlabeled(1)[0].id
    assert next_up == store.dataset.pairs[4].id


def test_double_submit_rejected(client):
    http, store, _ = client
    pid = store.dataset.pairs[0].id
    assert http.post(f"/pairs/{pid}/label", json={"label": "useful"}).status_code == 200
    resp = http.post(f"/pairs/{pid}/label", json={"label": "not_useful"})
    assert resp.status_code == 409
    assert resp.json()["error"] == "already_labeled"
    assert store.dataset.by_id()[pid].label == 1  # first write wins


def test_unknown_pair_404(client):
    http, _, _ = client
    resp = http.post("/pairs/doesnotexist/label", json={"label": "useful"})
    assert resp.status_code == 404


def test_bad_label_value_rejected(client):
    http, store, _ = client
    pid = store.dataset.pairs[0].id
    resp = http.post(f"/pairs/{pid}/label", json={"label": "maybe"})
    assert resp.status_code == 400
    assert store.dataset.by_id()[pid].label is None


def test_progress_and_export_track_submissions(client):
    http, store, _ = client
    assert http.get("/progress").json() == {"labeled": 0, "target": 10}
    labeled = {}
    for i, p in enumerate(store.dataset.pairs[:5]):
        label = "useful" if i % 2 == 0 else "not_useful"
        http.post(f"/pairs/{p.id}/label", json={"label": label})
        labeled[p.id] = 1 if i % 2 == 0 else 0
    assert http.get("/progress").json() == {"labeled": 5, "target": 10}
    rows = http.get("/export").json()["pairs"]
    assert {r["id"]: r["label"] for r in rows} == labeled


def test_session_complete_flow(client):
    http, store, _ = client
    for p in store.dataset.pairs[:10]:
        assert http.post(f"/pairs/{p.id}/label",
                         json={"label": "useful"}).status_code == 200
    resp = http.get("/pairs", params={"limit": 1})
    assert resp.status_code == 409
    assert resp.json()["error"] == "session_complete"
    # labels past the target are also refused
    extra = store.dataset.pairs[10].id
    assert http.post(f"/pairs/{extra}/label",
                     json={"label": "useful"}).status_code == 409
    assert len(http.get("/export").json()["pairs"]) == 10


def test_guidelines_served_verbatim(client):
    http, _, _ = client
    assert http.get("/guidelines").json() == {"guidelines": GUIDELINES}


def test_next_unlabeled_after_partial_progress(store_path):
    store = LabelStore(store_path, target_count=5)
    for p in store.dataset.pairs[:4]:
        store.submit_label(p.id, 0)
    remaining = store.next_unlabeled(5)
    assert [p.id for p in remaining] == [store.dataset.pairs[4].id,
                                         store.dataset.pairs[5].id,
                                         store.dataset.pairs[6].id,
                                         store.dataset.pairs[7].id,
                                         store.dataset.pairs[8].id]
    store.submit_label(store.dataset.pairs[4].id, 1)
    with pytest.raises(SessionComplete):
        store.next_unlabeled(1)


def test_target_capped_by_dataset_size(store_path):
    store = LabelStore(store_path, target_count=99)
    assert store.target == 12
