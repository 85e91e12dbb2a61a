import json

import pytest

import chromhom


def test_hexagon_over_a2():
    h = chromhom.homology(chromhom.graph("cycle:6"), chromhom.algebra("trunc:2"))
    assert h[(2, 4)] == (0, [2])
    assert h[(2, 3)] == (1, [])
    assert "[1_2]" in chromhom.table(chromhom.graph("cycle:6"), chromhom.algebra("trunc:2"))


def test_k4_over_a3():
    h = chromhom.homology(chromhom.graph("complete:4"), chromhom.algebra("trunc:3"), threads=2)
    assert h[(1, 5)] == (2, [3, 3, 6])


def test_loop_is_acyclic():
    assert chromhom.homology(chromhom.Graph(1, [(0, 0)]), chromhom.algebra("trunc:2")) == {}


def test_chromatic_polynomial():
    assert chromhom.chromatic_polynomial(chromhom.graph("complete:4")) == [0, -6, 11, -6, 1]


def test_json_output():
    doc = json.loads(chromhom.homology_json(chromhom.graph("cycle:3"), chromhom.algebra("trunc:2")))
    assert doc["algebra"] == "trunc:2"


def test_errors():
    with pytest.raises(ValueError):
        chromhom.graph("star:3")
    with pytest.raises(ValueError):
        chromhom.algebra("poly:0,0,3")
    code, _, err = chromhom.run_cli(["compute"])
    assert code == 2 and err


def test_paper_suite_passes():
    reports = chromhom.paper_suite()
    assert reports
    assert all(r["passed"] for r in reports if not r["soft"])
