import json
import pathlib

import pytest

import dkcat

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_fields():
    assert dkcat.Field.parse("F7") == dkcat.Field.prime(7)
    assert dkcat.Field.rationals().name == "Q"
    assert dkcat.Field.prime(5).characteristic == 5
    with pytest.raises(ValueError):
        dkcat.Field.parse("F4")


def test_complexes():
    f = dkcat.Field.prime(3)
    assert dkcat.ChainComplex.disk(f, 1).homology() == [0, 0]
    s = dkcat.ChainComplex.sphere(f, 2)
    assert s.homology() == [0, 0, 1]
    assert dkcat.tensor(s, s).ranks == [0, 0, 0, 0, 1]
    c = dkcat.ChainComplex.from_json(dkcat.ChainComplex.disk(f, 1).to_json(), f)
    assert c == dkcat.ChainComplex.disk(f, 1)
    assert dkcat.normalize_gamma(c, 3) == c


def test_chain_interval():
    for field in ["Q", "F2", "F3", "F5"]:
        r = dkcat.verify_interval("chain", field)
        assert r["passed"]
        assert all(a["verdict"] == "pass" for a in r["cocategory"]["axioms"])
    doc = json.loads(dkcat.chain_interval_json(dkcat.Field.prime(2)))
    assert set(doc["objects"]) == {"I", "I1", "I2"}


def test_hopf_interval():
    r = dkcat.verify_hopf({"cyclic": 2}, "F3")
    verdicts = {a["id"]: a for a in r["cocategory"]["axioms"]}
    assert verdicts["C3"]["verdict"] == "fail"
    assert "kernel dimension 1" in verdicts["C3"]["witness"]
    assert not r["passed"]


def test_dold_kan():
    s = dkcat.dold_kan(trials=10, seed=42, max_degree=3, max_rank=2)
    assert s["passed"] == 10 and s["failed"] == 0
    assert s == dkcat.dold_kan(trials=10, seed=42, max_degree=3, max_rank=2)
    bad = dkcat.dold_kan(trials=10, seed=42, max_degree=3, max_rank=2, inject_fault=True)
    assert bad["failed"] > 0
    with pytest.raises(dkcat.UnsupportedField):
        dkcat.dold_kan(trials=1, field="Q")


def test_path_object():
    s = dkcat.path_object(dkcat.suite_category("disk", "F2"))
    assert s["report"]["passed"]
    s = dkcat.path_object((DATA / "dual_numbers.json").read_text(), field="F3")
    assert s["report"]["passed"]
    with pytest.raises(dkcat.FieldMismatch):
        dkcat.path_object(dkcat.suite_category("unit", "F2"), field="F3")


def test_dk_check():
    v = dkcat.dk_check((DATA / "identity.json").read_text(), field="F3")
    assert v["dk-equiv"] and v["characterization-equal"]
    with pytest.raises(dkcat.FieldMismatch):
        dkcat.dk_check((DATA / "mismatch.json").read_text())


def test_characterization():
    s = dkcat.characterization(trials=20, seed=7, field="F2")
    assert s["agreeing"] == 20
