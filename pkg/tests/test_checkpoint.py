import json

from gauss_homotopy.utils.checkpoint import load_checkpoint, remove_checkpoint, save_checkpoint


def test_round_trip(tmp_path):
    out = str(tmp_path / "out.jsonl")
    save_checkpoint(out, ["{}", '{"a":1}'], 2, "inputs.txt")
    data = load_checkpoint(out)
    assert data == {"records": ["{}", '{"a":1}'], "line_idx": 2, "source": "inputs.txt"}
    assert not (tmp_path / "out.jsonl.checkpoint.json.tmp").exists()


def test_missing(tmp_path):
    assert load_checkpoint(str(tmp_path / "out.jsonl")) is None


def test_corrupt(tmp_path):
    (tmp_path / "out.jsonl.checkpoint.json").write_text("{not json", encoding="utf-8")
    assert load_checkpoint(str(tmp_path / "out.jsonl")) is None


def test_inconsistent_count(tmp_path):
    path = tmp_path / "out.jsonl.checkpoint.json"
    path.write_text(json.dumps({"records": ["{}"], "line_idx": 2, "source": "x"}), encoding="utf-8")
    assert load_checkpoint(str(tmp_path / "out.jsonl")) is None


def test_remove(tmp_path):
    out = str(tmp_path / "out.jsonl")
    save_checkpoint(out, [], 0, "inputs.txt")
    remove_checkpoint(out)
    remove_checkpoint(out)
    assert load_checkpoint(out) is None
