import json

import pytest

from k5n.cli import run


def invoke(capsys, *args):
    code = run(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_antidist_prints_value(capsys):
    code, out, _ = invoke(capsys, "antidist", "01234", "01432")
    assert code == 0 and out.strip() == "1"


def test_gen_drs_verify_pipeline(capsys, tmp_path):
    path = tmp_path / "d.json"
    code, _, _ = invoke(capsys, "gen", "drs", "--r", "1", "--s", "1",
                        "-o", str(path))
    assert code == 0
    code, out, _ = invoke(capsys, "verify", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["optimal"] and doc["crossings"] == 48 and doc["antipodal_free"]


def test_gen_zar_and_decompose(capsys, tmp_path):
    path = tmp_path / "z.json"
    assert invoke(capsys, "gen", "zar", "--n", "6", "-o", str(path))[0] == 0
    code, out, _ = invoke(capsys, "decompose", str(path))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["pairs"]) == 3 and (doc["r"], doc["s"]) == (0, 0)


def test_key_and_solve_key(capsys, tmp_path):
    d = tmp_path / "d.json"
    k = tmp_path / "k.json"
    invoke(capsys, "gen", "drs", "--r", "2", "--s", "1", "-o", str(d))
    code, _, _ = invoke(capsys, "key", str(d), "-o", str(k))
    assert code == 0
    code, out, _ = invoke(capsys, "solve-key", str(k), "--n", "12")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["solutions"]) == 2


def test_forbid_check(capsys, tmp_path):
    frag = {
        "format": "k5n/1", "kind": "key",
        "rotations": ["01234", "01432", "03241", "04231"],
        "labels": [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]],
    }
    path = tmp_path / "f.json"
    path.write_text(json.dumps(frag))
    code, out, _ = invoke(capsys, "forbid-check", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["realizable"] is False
    assert doc["certificate"]["combination_count"] == 4


def test_classify_none(capsys):
    code, out, _ = invoke(capsys, "classify", "--n", "10")
    assert code == 0
    assert json.loads(out)["verdict"] == "none"


def test_malformed_json_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = invoke(capsys, "verify", str(path))
    assert code == 2 and "error" in err


def test_wrong_kind_exits_2(capsys, tmp_path):
    path = tmp_path / "key.json"
    path.write_text(json.dumps({"format": "k5n/1", "kind": "key",
                                "rotations": [], "labels": []}))
    code, _, _ = invoke(capsys, "verify", str(path))
    assert code == 2


def test_domain_failure_exits_1(capsys, tmp_path):
    # valid JSON, invalid drawing (same rotation pair crossing once)
    doc = {"format": "k5n/1", "kind": "drawing", "n": 2,
           "rotations": ["01234", "01234"], "lambda": [[0, 1], [1, 0]]}
    path = tmp_path / "d.json"
    path.write_text(json.dumps(doc))
    code, out, err = invoke(capsys, "verify", str(path))
    assert code == 1
    report = json.loads(out)
    assert report["valid"] is False


def test_unknown_flag_exits_2(capsys):
    assert run(["classify", "--frobnicate"]) == 2


def test_deterministic_output(capsys):
    _, out1, _ = invoke(capsys, "gen", "drs", "--r", "2", "--s", "2")
    _, out2, _ = invoke(capsys, "gen", "drs", "--r", "2", "--s", "2")
    assert out1 == out2


def test_classify_odd_n_is_domain_error(capsys):
    code, _, err = invoke(capsys, "classify", "--n", "7")
    assert code == 1 and "error" in err
