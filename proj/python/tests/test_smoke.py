"""End-to-end smoke tests for the python extension module."""

import json

import pytest

import _mitosiskit as mk


def test_ring_ranks():
    assert mk.ring_ranks("gz-a", 3) == [1, 2, 2, 1]
    assert mk.ring_ranks("sgz", 2) == [1, 2, 2, 2, 1]


def test_symplectic_volume_polynomial():
    doc = json.loads(mk.volume_polynomial_json("sgz", 2))
    assert doc["family"] == "sgz"
    assert doc["volume_polynomial"]["terms"] == [
        {"exponents": [1, 3], "coeff": "-1/6"},
        {"exponents": [3, 1], "coeff": "1/6"},
    ]


def test_mitosis_faces():
    doc = json.loads(mk.mitosis_json("ddo-c2", 2, [2, 1, 2]))
    cells = sorted(tuple(map(tuple, f["cells"])) for f in doc["faces"])
    assert cells == [((2, 1),), ((2, 2),), ((3, 2),)]
    text = mk.mitosis_text("ddo-c2", 2, [2, 1, 2])
    assert text.count("+") == 3


def test_degree_check():
    doc = json.loads(mk.degree_check_json("gz-a", 3, [1, 2, 1], rows=3))
    assert doc["length"] == 3
    assert doc["polynomials_match"] is True
    assert len(doc["rows"]) == 3
    assert all(row["match"] for row in doc["rows"])


def test_structure_constants():
    doc = json.loads(mk.structure_constants_json("gz-a", 3, [1, 2], [2, 1]))
    coeffs = {tuple(c["word"]): c["coeff"] for c in doc["constants"]}
    assert coeffs == {(1,): "1", (2,): "1"}


def test_member_accepts_rational_strings():
    doc = json.loads(mk.member_json("sgz", 2, ["5/2", "1/2"]))
    assert doc["degenerate"] is False
    assert doc["params"] == ["5/2", "1/2"]


def test_member_rejects_bad_params():
    with pytest.raises(Exception):
        mk.member_json("gz-a", 3, ["1", "2"])
