import csv
import io
import json

import pytest

from kronred.cache import Cache, CacheRecord
from kronred.cli import main
from kronred.kronecker import kron_value


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("triple, value", [(("[2,2]",) * 3, "1"), (("[1,1]",) * 3, "0")])
def test_kron(capsys, triple, value):
    code, out, _ = run(capsys, "kron", *triple)
    assert code == 0 and out.strip() == value


def test_kron_algorithms(capsys):
    code, out, _ = run(capsys, "kron", "[2,1]", "[2,1]", "[2,1]", "--all-algorithms")
    lines = out.split("\n")
    assert code == 0 and lines[:3] == ["char_sum 1", "multi_lr_sum 1", "contingency_sum 1"]
    assert "verdict OK" in out
    code, out, _ = run(capsys, "kron", "[2,2]", "[2,2]", "[2,2]", "--algorithm", "ct")
    assert code == 0 and out.strip() == "1"


def test_kron_disagreement_exit(capsys, monkeypatch):
    import kronred.kronecker as kr
    real = kr._RAW[kr.CONTINGENCY_SUM]
    monkeypatch.setitem(kr._RAW, kr.CONTINGENCY_SUM,
                        lambda *t: kr.CoefficientResult(real(*t).value + 1, kr.CONTINGENCY_SUM, None))
    kr.clear_cache()
    code, out, _ = run(capsys, "kron", "[2,1]", "[2,1]", "[2,1]", "--all-algorithms", "--no-cache")
    kr.clear_cache()
    assert code == 3 and "DISAGREE" in out


def test_kron_mismatch_and_malformed(capsys):
    code, out, err = run(capsys, "kron", "[2]", "[1]", "[1]")
    assert code == 0 and out.strip() == "0" and "sizes differ" in err
    with pytest.raises(SystemExit) as e:
        main(["kron", "[1,2]", "[3]", "[3]"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        main(["kron", "[1]", "[1]"])
    assert e.value.code == 1


def test_kron_formats_roundtrip(capsys):
    code, out, _ = run(capsys, "kron", "[3,1]", "[2,2]", "[2,1,1]", "--format", "json")
    data = json.loads(out)
    assert int(data["value"]) == kron_value((3, 1), (2, 2), (2, 1, 1))
    code, out, _ = run(capsys, "kron", "[3,1]", "[2,2]", "[2,1,1]", "--format", "csv")
    (row,) = csv.DictReader(io.StringIO(out))
    assert int(row["value"]) == kron_value((3, 1), (2, 2), (2, 1, 1)) and row["tool_version"]


def test_rkron(capsys, tmp_path):
    assert run(capsys, "rkron", "[4,4]", "[4,4]", "[2,2,2,2,2,2]")[:2] == (0, "1\n")
    assert run(capsys, "rkron", "[]", "[]", "[]")[:2] == (0, "1\n")
    code, out, _ = run(capsys, "rkron", "[2,1]", "[1,1]", "[1]", "--method", "both",
                       "--figures", str(tmp_path))
    assert code == 0 and out.startswith("bdo 1\nstabilization 1") and "verdict OK" in out
    assert (tmp_path / "stabilization.png").stat().st_size > 0


def test_rkron_no_plateau(capsys):
    code, _, err = run(capsys, "rkron", "[2,1]", "[2,1]", "[2,1]", "--method", "stab", "--ceiling", "6")
    assert code == 4 and "no plateau" in err


def test_lr(capsys):
    assert run(capsys, "lr", "[2,1]", "[1,1]", "[1]")[:2] == (0, "1\n")
    assert run(capsys, "lr", "[3,1]", "[3,1]", "[]")[:2] == (0, "1\n")
    assert run(capsys, "lr", "[7,6,5]", "[4,3,1]", "[3,3]", "[3,1]")[:2] == (0, "6\n")


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "theorem1", "--profile", "quick")
    assert code == 0 and "status=pass" in out
    code, out, err = run(capsys, "verify", "nonsense")
    assert code == 1 and "saturation_witness" in err
    code, out, _ = run(capsys, "verify", "saturation_witness", "--format", "json",
                       "--figures", str(tmp_path))
    assert code == 0 and json.loads(out)[0]["cases_run"] == 2
    assert (tmp_path / "verification.png").exists()


def test_verify_failure_exit(capsys, monkeypatch):
    import kronred.harness as hz
    monkeypatch.setattr(hz, "SATURATION_CASES", ((((2, 2),) * 3, 0),))
    code, out, _ = run(capsys, "verify", "saturation_witness")
    assert code == 2 and "status=fail" in out


def test_sweep(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "kron", "--n", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 8
    for r in rows:
        t = [tuple(int(x) for x in r[k].strip("[]").split(",") if x) for k in ("lambda", "mu", "nu")]
        assert int(r["value"]) == kron_value(*t)
    code, out, _ = run(capsys, "sweep", "kron", "--n", "0")
    assert len(list(csv.DictReader(io.StringIO(out)))) == 1 and out.strip().split("\n")[1].split(",")[4] == "1"
    code, out, _ = run(capsys, "sweep", "kron", "--n", "3", "--format", "json", "--figures", str(tmp_path))
    data = json.loads(out)
    assert len(data) == 27
    assert any(d["triple"] == {"lambda": "[2,1]", "mu": "[2,1]", "nu": "[2,1]"} and d["value"] == "1" for d in data)
    assert (tmp_path / "sweep_kron_3.png").exists()
    keys = [d["canonical_key"] for d in data]
    assert keys == sorted(keys)


def test_sweep_rkron(capsys):
    code, out, _ = run(capsys, "sweep", "rkron", "--n", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 8
    assert {r["value"] for r in rows if r["alpha"] == r["beta"] == r["gamma"] == "[]"} == {"1"}


def test_warm_cache_identical(capsys, isolated_cache):
    first = run(capsys, "sweep", "kron", "--n", "4")
    assert Cache(isolated_cache).records()
    second = run(capsys, "sweep", "kron", "--n", "4")
    assert first[1] == second[1] and first[0] == second[0] == 0


def test_corrupted_cache_is_reported(capsys, isolated_cache):
    run(capsys, "kron", "[2,2]", "[2,2]", "[2,2]")
    path = isolated_cache / "coefficients.jsonl"
    rec = CacheRecord.parse(path.read_text().splitlines()[0])
    path.write_text(CacheRecord(rec.kind, rec.canonical_key, "9", rec.algorithm).dump() + "\n")
    code, out, err = run(capsys, "cache", "verify")
    assert code == 3 and "corrupt record" in err
    code, out, _ = run(capsys, "cache", "verify")
    assert code == 0 and "0 corrupt" in out


def test_cache_stats_and_unwritable(capsys, tmp_path):
    run(capsys, "lr", "[2,1]", "[1]", "[1,1]")
    code, out, _ = run(capsys, "cache", "stats")
    assert code == 0 and "kind lr 1" in out
    target = tmp_path / "file"
    target.write_text("")
    code, _, err = run(capsys, "kron", "[1]", "[1]", "[1]", "--out", str(target / "x.txt"))
    assert code == 1
