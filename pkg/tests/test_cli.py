import json
from fractions import Fraction

import pytest

from seshadri.cli import main, rational


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def doc(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_rational_encoding():
    assert rational(1) == {"num": 1, "den": 1, "decimal": "1.000000000000"}
    assert rational(Fraction(-2, 3))["decimal"] == "-0.666666666667"
    assert rational(Fraction(1, 8))["decimal"] == "0.125000000000"


def test_eps_gen_document(capsys):
    d = doc(capsys, "eps-gen", "--surface", "p2", "--r", "6", "--L", "3,1,1,1,1,1,1", "--threads", "1")
    assert d["schema"] == 1 and d["tool"] == "seshadri" and d["version"]
    assert (d["epsilon"]["num"], d["epsilon"]["den"]) == (3, 2)
    assert d["case"] == "case3"
    assert d["witness"] == {"kind": "A-class", "vector": {"alpha": 3, "beta": [1, 1, 1, 1, 1, 1, 2]}}
    assert d["caps"]["m_cap"] == 6
    assert d["input"]["r"] == 6
    assert "threads" not in json.dumps(d)


def test_eps_point_oracle(capsys, tmp_path):
    oracle = tmp_path / "oracle.json"
    oracle.write_text('{"in_Z": true}')
    d = doc(capsys, "eps-point", "--r", "8", "--L", "3,1,1,1,1,1,1,1,1", "--oracle", str(oracle))
    assert (d["epsilon"]["num"], d["epsilon"]["den"]) == (1, 2)
    assert d["input"]["oracle"] == {"in_Z": True}


def test_rational_input(capsys):
    d = doc(capsys, "eps-gen", "--L", "5/2,1/2,1/2,1/2,1/2,1/2")
    assert d["epsilon"]["num"] == 2 and d["scale"]["den"] == 2


def test_hirzebruch(capsys):
    d = doc(capsys, "eps-gen", "--surface", "fn", "--n", "3", "--L", "2,7", "--assert-pencil")
    assert d["epsilon"]["num"] == 2 and d["case"] == "fn-direct"
    code, _, err = run(capsys, "eps-gen", "--surface", "fn", "--n", "3", "--L", "2,7")
    assert code == 2 and "--assert-pencil" in err


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "eps-gen", "--L", "2,1,1")[0] == 2
    assert run(capsys, "eps-gen", "--L", "3,1,1", "--r", "3")[0] == 2
    assert run(capsys, "eps-gen", "--L", "4,1,1,1,1,1,1,1,1,1")[0] == 2
    oracle = tmp_path / "bad.json"
    oracle.write_text('{"fixed_curves": [{"alpha": 1, "beta": [1, 1, 1, 0, 0, 0]}]}')
    assert run(capsys, "eps-point", "--L", "3,1,1,1,1,1,1", "--oracle", str(oracle))[0] == 3
    oracle.write_text("not json")
    assert run(capsys, "eps-point", "--L", "3,1,1,1,1,1,1", "--oracle", str(oracle))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_unsafe_cap_watermark(capsys):
    d = doc(capsys, "eps-gen", "--L", "3,1,1,1,1,1,1", "--alpha-cap", "1", "--unsafe-cap")
    assert "watermark" in d and d["caps"]["m_cap"] == 1
    d = doc(capsys, "eps-gen", "--L", "3,1,1,1,1,1,1", "--alpha-cap", "1")
    assert "watermark" not in d and d["caps"]["m_cap"] == 6
    assert run(capsys, "eps-gen", "--L", "3,1,1,1,1,1,1", "--unsafe-cap")[0] == 2


def test_embedding_commands(capsys):
    L = "6,2,2,2,2,2,2,1"
    assert doc(capsys, "vample", "--L", L)["literal_differs"] is True
    assert doc(capsys, "eps-min", "--L", L)["epsilon_min"]["num"] == 1
    assert doc(capsys, "jet-check", "--L", L, "--k", "3")["not_k_jet_ample"] is True
    d = doc(capsys, "jv-check", "--L", "10,4,3,3,3,3,3,3,3")
    assert d["equal"] is False and d["condition_b"] is False


def test_enum_records(capsys):
    code, out, _ = run(capsys, "enum", "--s", "7", "--alpha-max", "6", "--tail", "all")
    lines = out.splitlines()
    header = json.loads(lines[0])
    assert header["count"] == 56 == len(lines) - 1
    assert json.loads(lines[1]) == {"alpha": 0, "beta": [-1, 0, 0, 0, 0, 0, 0]}


def test_weyl_check(capsys):
    d = doc(capsys, "weyl-check", "--s", "7", "--alpha-max", "6")
    assert d["phi_equal"] and d["psi_equal"]
    d = doc(capsys, "weyl-check", "--s", "3", "--alpha-max", "2")
    assert not d["psi_equal"]
    assert d["diffs"]["psi"]["enumeration_only"] == [{"alpha": 1, "beta": [1, 1, 1]}]


def test_ldp_and_tables(capsys):
    d = doc(capsys, "ldp-verify", "--k", "3,2")
    res = d["results"][0]
    assert len(res["curves"]) == 4 and res["epsilon"]["num"] == 2
    assert [x["num"] for x in res["discrepancies"]] == [1, 0, 0, 0]
    assert len(doc(capsys, "ldp-verify")["results"]) == 7
    table = doc(capsys, "ar-table")["table"]
    assert [(t["epsilon"]["num"], t["epsilon"]["den"]) for t in table] == \
        [(2, 1)] * 5 + [(3, 2), (4, 3), (1, 1)]


def test_check_ample(capsys):
    d = doc(capsys, "check-ample", "--L", "2,1,1")
    assert d["passed"] is False and d["violations"][0]["vector"] == {"alpha": 1, "beta": [1, 1]}


def test_text_format(capsys):
    code, out, _ = run(capsys, "eps-gen", "--L", "3,1,1,1,1,1,1", "--format", "text")
    assert code == 0 and "epsilon: 3/2" in out


def test_log_env(capsys, monkeypatch):
    monkeypatch.setenv("SESHADRI_LOG", "loud")
    assert run(capsys, "ar-table", "--r", "1")[0] == 2
