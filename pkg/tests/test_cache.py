import json

from kronred.cache import Cache, CacheRecord, key_for, reduced_key


def test_roundtrip(tmp_path):
    c = Cache(tmp_path)
    value, hit = c.lookup("kron", ((2, 1), (2, 1), (2, 1)), "char_sum", lambda: 1)
    assert (value, hit) == (1, False)
    again = Cache(tmp_path)
    assert again.lookup("kron", ((2, 1), (2, 1), (2, 1)), "char_sum", lambda: 99) == (1, True)
    assert again.problems == 0


def test_keys():
    assert key_for("kron", ((2,), (1, 1), (1, 1))) == key_for("kron", ((1, 1), (2,), (1, 1)))
    assert key_for("kron", ((2,), (1, 1), (1, 1))) == key_for("kron", ((2,), (2,), (2,)))
    assert reduced_key((1,), (), (2,)) == reduced_key((2,), (1,), ())
    assert key_for("lr", ((2, 1), (1,), (1, 1))) == "[2,1] [1] [1,1]"


def test_record_dump_parse():
    rec = CacheRecord("kron", "[1] [1] [1]", "1", "char_sum")
    assert CacheRecord.parse(rec.dump()) == rec


def test_corrupt_line_warns_and_recomputes(tmp_path, capsys):
    good = CacheRecord("kron", "[1] [1] [1]", "1", "char_sum").dump()
    (tmp_path / "coefficients.jsonl").write_text("{not json\n" + good + "\n"
                                                 + json.dumps({"kind": "kron"}) + "\n")
    c = Cache(tmp_path)
    assert c.problems == 2 and len(c) == 1
    assert "corrupt record" in capsys.readouterr().err


def test_negative_value_rejected(tmp_path, capsys):
    bad = json.dumps({"kind": "kron", "canonical_key": "[1] [1] [1]", "value": "-1",
                      "algorithm": "char_sum", "tool_version": "0"})
    (tmp_path / "coefficients.jsonl").write_text(bad + "\n")
    c = Cache(tmp_path)
    assert c.problems == 1 and c.get("kron", "[1] [1] [1]", "char_sum") is None


def test_conflict_warns_and_recomputes(tmp_path, capsys):
    key = key_for("kron", ((2,), (2,), (2,)))
    a = CacheRecord("kron", key, "1", "char_sum").dump()
    b = CacheRecord("kron", key, "5", "char_sum").dump()
    (tmp_path / "coefficients.jsonl").write_text(a + "\n" + b + "\n")
    c = Cache(tmp_path)
    assert "conflicting" in capsys.readouterr().err
    value, hit = c.lookup("kron", ((2,), (2,), (2,)), "char_sum", lambda: 1)
    assert (value, hit) == (1, False)
    lines = (tmp_path / "coefficients.jsonl").read_text().splitlines()
    assert len(lines) == 1
    assert Cache(tmp_path).problems == 0


def test_put_disagreement_replaces(tmp_path, capsys):
    c = Cache(tmp_path)
    c.put("lr", "[1] [1] []", "lr_tableaux", 3)
    c.put("lr", "[1] [1] []", "lr_tableaux", 1)
    assert "disagrees" in capsys.readouterr().err
    assert Cache(tmp_path).get("lr", "[1] [1] []", "lr_tableaux") == 1


def test_disabled_and_clear(tmp_path):
    off = Cache(tmp_path, enabled=False)
    off.put("kron", "k", "a", 1)
    assert off.get("kron", "k", "a") is None and not (tmp_path / "coefficients.jsonl").exists()
    c = Cache(tmp_path)
    c.put("kron", "k", "a", 1)
    c.clear()
    assert len(Cache(tmp_path)) == 0
