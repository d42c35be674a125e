import json

import pytest

import coxinv


def test_h3_rows():
    rows = coxinv.analyze("H3")
    assert [r["degree"] for r in rows] == [0, 1, 2, 3]
    assert rows[0]["Gplus"] == "H3"
    assert all(int(r["order"]) * int(r["class_size"]) == 120 for r in rows)


def test_e7_split_labels():
    labels = [(r["degree"], r["label"]) for r in coxinv.analyze("E7")]
    assert (3, "droite") in labels and (3, "triangle") in labels
    assert len(labels) == 10


def test_verify_f4_and_e6():
    assert coxinv.verify("F4")["ok"]
    e6 = coxinv.verify("E6")
    assert [(m["row"], m["column"]) for m in e6["mismatches"]] == [("2", "TildeGplus")]


def test_theorems_filter():
    rep = coxinv.theorems("E6", checks=["3.3"])
    assert rep["summary"]["fail"] == 0
    assert [c["id"] for c in rep["checks"]] == ["3.3"]


def test_models_against_enumeration():
    p = coxinv.predict_profile("B", 4, 1, 1, 1)
    bf = coxinv.brute_force_orders("B", 4, 1, 1, 1)
    assert p["order"] == bf["centralizer"]


def test_outputs_are_deterministic():
    a = coxinv.Analysis("D", rank=5)
    b = coxinv.Analysis("D", rank=5)
    assert a.csv() == b.csv()
    assert json.loads(a.json())["schema_version"] == 1


def test_errors():
    with pytest.raises(ValueError):
        coxinv.Analysis("D", rank=2)
    with pytest.raises(ValueError):
        coxinv.Analysis("I2")
    assert coxinv.coxeter_order("A1xB3") == "96"
