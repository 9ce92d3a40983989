import json

import pytest

import cecac

E1 = json.dumps(
    {
        "name": "e1",
        "attributes": ["a1", "a2", "a3"],
        "candidates": [
            {"id": "c1", "attributes": ["a1"], "profit": 3},
            {"id": "c2", "attributes": ["a2"], "profit": 2},
            {"id": "c3", "attributes": ["a3"], "profit": 5},
            {"id": "c4", "attributes": [], "profit": 4},
        ],
        "constraints": ["a1 -> a2", "a3 -> ~a2"],
        "k": 2,
        "p": 8,
    }
)


def test_solve_auto():
    sol = cecac.solve(E1)
    assert sol["feasible"] is True
    assert sol["committee"] == ["c3", "c4"]
    assert sol["profit"] == 9
    assert sol["solver"] == "chaindp"


def test_solvers_agree():
    oracle = cecac.solve(E1, solver="oracle")
    chain = cecac.solve(E1, solver="chaindp")
    assert oracle["feasible"] == chain["feasible"]
    assert oracle["profit"] == chain["profit"]


def test_not_applicable_raises():
    with pytest.raises(cecac.NotApplicable):
        cecac.solve(E1, solver="treedp")


def test_classify():
    info = cecac.classify(E1)
    assert info["max_attrs_per_candidate"] == 1
    assert info["max_attr_occurrence"] == 2
    assert info["max_constraint_length"] == 2
    assert info["solver"] == "chaindp"


def test_check():
    good = cecac.check(E1, ["c3", "c4"])
    assert good["ok"] is True and good["profit"] == 9
    bad = cecac.check(E1, ["c1", "c3"])
    assert bad["ok"] is False
    assert bad["violated"] == ["a1 -> a2"]


def test_canonical_render():
    assert cecac.canonical("a1&a2|a3 -> ~x") == "((a1 & a2) | a3) -> ~x"


def test_random_instance_deterministic():
    a = cecac.random_instance(seed=7, m=10, attributes=6, constraints=3, k=4)
    b = cecac.random_instance(seed=7, m=10, attributes=6, constraints=3, k=4)
    assert a == b
    doc = json.loads(a)
    assert len(doc["candidates"]) == 10 and doc["k"] == 4


def test_malformed_instance_raises():
    with pytest.raises(cecac.Error):
        cecac.solve("{\"name\": \"broken\"}")
