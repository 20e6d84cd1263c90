import csv
import io
import json
import sys

from weil3.cli import CENSUS_COLUMNS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_supersingular(capsys):
    code, out, _ = run(capsys, "check", "--q", "9", "--a1", "3", "--a2", "9", "--a3", "27")
    rec = json.loads(out)
    assert code == 0
    assert (rec["verdict"], rec["p_rank"], rec["supersingular"]) == ("IrreducibleChar", 0, True)
    assert rec["schema_version"] == 1
    assert rec["polygon"] == {"vertices": [[0, 6], [6, 0]], "slopes": [["1", 6]]}


def test_check_rejects_non_prime_power(capsys):
    code, out, err = run(capsys, "check", "--q", "6", "--a1", "0", "--a2", "0", "--a3", "0")
    assert code != 0 and out == ""
    assert "6 is not a prime power" in err


def test_check_not_weil_reports_condition_1(capsys):
    code, out, _ = run(capsys, "check", "--q", "2", "--a1", "9", "--a2", "0", "--a3", "0")
    rec = json.loads(out)
    assert code == 0 and rec["verdict"] == "NotWeil" and "condition 1 fails" in rec["reasons"]
    assert rec["irreducible"] is None and rec["p_rank"] is None


def test_enumerate_q2_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["enumerate", "--q", "2", "--out", str(a)]) == 0
    assert main(["enumerate", "--q", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    recs = [json.loads(line) for line in a.read_text().splitlines()]
    keys = [(r["a1"], r["a2"], r["a3"]) for r in recs]
    assert keys == sorted(keys) and (0, 0, 0) in keys and (1, 1, 1) in keys


def test_enumerate_q8_cubes(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "8")
    cubes = [json.loads(line) for line in out.splitlines() if '"CubeOfQuadratic"' in line]
    char = sorted(r["beta"] for r in cubes if r["is_char"])
    assert char == [-2, 2]
    assert {-4, 4} <= {r["beta"] for r in cubes if not r["is_char"]}


def test_jsonl_and_csv_agree(capsys):
    _, jsonl, _ = run(capsys, "enumerate", "--q", "4")
    _, text, _ = run(capsys, "enumerate", "--q", "4", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    recs = [json.loads(line) for line in jsonl.splitlines()]
    assert len(rows) == len(recs)
    assert [r["verdict"] for r in rows] == [r["verdict"] for r in recs]
    assert "\r" not in text


def test_check_reproduces_enumerated_records(capsys):
    _, out, _ = run(capsys, "enumerate", "--q", "3")
    recs = [json.loads(line) for line in out.splitlines()]
    for rec in recs[::25]:
        _, one, _ = run(capsys, "check", "--q", "3", "--a1", str(rec["a1"]), "--a2", str(rec["a2"]), "--a3", str(rec["a3"]))
        assert json.loads(one) == rec


def test_census_rows(capsys):
    code, out, _ = run(capsys, "census", "--q", "4", "2", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and tuple(rows[0]) == CENSUS_COLUMNS
    assert [r["q"] for r in rows] == ["4", "2", "3"]
    for r in rows:
        parts = sum(int(r[k]) for k in CENSUS_COLUMNS[4:-1])
        assert int(r["weil_total"]) == parts
        assert int(r["wall_time_ms"]) >= 0


def test_verify_small_full_passes(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "3", "--mode", "full")
    assert code == 0
    assert out.strip().endswith("PASS total disagreements=0")


def test_verify_sampled_is_deterministic(capsys):
    args = ("verify", "--q", "49", "--mode", "sampled", "--seed", "5", "--samples", "300")
    first, second = run(capsys, *args), run(capsys, *args)
    assert first == second and first[0] == 0


def test_verify_full_caps_q(capsys):
    code, _, err = run(capsys, "verify", "--q", "49", "--mode", "full")
    assert code == 2 and "sampled" in err


def test_verify_detects_corrupted_condition(monkeypatch, capsys):
    weilcheck = sys.modules["weil3.weilcheck"]
    honest = weilcheck.condition_values

    def drop_condition_3(q, a1, a2, a3):
        c1, c2, _, c4 = honest(q, a1, a2, a3)
        return c1, c2, True, c4

    monkeypatch.setattr(weilcheck, "condition_values", drop_condition_3)
    code, out, _ = run(capsys, "verify", "--q", "2", "--mode", "full")
    assert code == 1
    assert "FAIL weil" in out
