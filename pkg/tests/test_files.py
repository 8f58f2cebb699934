import json

import pytest

from homcoh import files, fixtures
from homcoh.cochain import MultilinearMap
from homcoh.errors import ParseError


def test_algebra_round_trip(tmp_path, a3, b2, g2, l4a):
    for A in (a3, b2, g2, l4a, fixtures.g1(2, 3)):
        payload = files.algebra_to_json(A)
        again = files.parse_algebra(payload)
        assert again == A


def test_algebra_file_loading(tmp_path):
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(files.algebra_to_json(fixtures.assoc2())))
    assert files.load_algebra_file(str(path)) == fixtures.assoc2()


def test_unknown_field_rejected():
    payload = files.algebra_to_json(fixtures.assoc2())
    payload["extra"] = 1
    with pytest.raises(ParseError):
        files.parse_algebra(payload)


def test_malformed_rational_rejected():
    payload = files.algebra_to_json(fixtures.assoc2())
    payload["alpha"][0][0] = "1/0"
    with pytest.raises(ParseError):
        files.parse_algebra(payload)


def test_lie_antisymmetry_completion():
    payload = {
        "name": "half", "kind": "lie", "dim": 2, "basis": ["e1", "e2"],
        "alpha": [["1", "0"], ["0", "1"]],
        "mul": [{"left": "e1", "right": "e2", "value": {"e1": "1"}}],
    }
    A = files.parse_algebra(payload)
    assert A.mul[1][0] == tuple(-x for x in A.mul[0][1])


def test_lie_inconsistent_orders_rejected():
    payload = {
        "name": "bad", "kind": "lie", "dim": 2, "basis": ["e1", "e2"],
        "alpha": [["1", "0"], ["0", "1"]],
        "mul": [
            {"left": "e1", "right": "e2", "value": {"e1": "1"}},
            {"left": "e2", "right": "e1", "value": {"e1": "1"}},
        ],
    }
    with pytest.raises(ParseError):
        files.parse_algebra(payload)


def test_duplicate_product_rejected():
    payload = {
        "name": "dup", "kind": "associative", "dim": 1, "basis": ["e1"],
        "alpha": [["1"]],
        "mul": [
            {"left": "e1", "right": "e1", "value": {"e1": "1"}},
            {"left": "e1", "right": "e1", "value": {"e1": "2"}},
        ],
    }
    with pytest.raises(ParseError):
        files.parse_algebra(payload)


def test_json_decode_error_carries_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"name": ')
    with pytest.raises(ParseError) as err:
        files.load_algebra_file(str(path))
    assert "line" in str(err.value)


def test_morphism_round_trip(tmp_path, phi):
    files.write_builtin_files(str(tmp_path))
    loaded = files.load_morphism_file(str(tmp_path / "phi_assoc.json"))
    assert loaded.matrix == phi.matrix
    assert loaded.source == phi.source
    assert loaded.target == phi.target


def test_morphism_reference_by_builtin_name(tmp_path):
    payload = {"source": "a3", "target": "b2",
               "matrix": [["1", "1", "0"], ["-1", "-1", "0"]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(payload))
    loaded = files.load_morphism_file(str(path))
    assert loaded.source.name.startswith("assoc3")


def test_deformation_round_trip(tmp_path):
    files.write_builtin_files(str(tmp_path))
    md = files.load_deformation_file(str(tmp_path / "mdef_2.json"))
    expect = fixtures.mdef_2()
    assert md.phi.matrix == expect.phi.matrix
    assert md.def_a.terms == expect.def_a.terms
    assert md.def_b.terms == expect.def_b.terms
    assert md.phi_terms == expect.phi_terms

    d = files.load_deformation_file(str(tmp_path / "def_g1.json"))
    assert d.terms == fixtures.def_g1().terms


def test_deformation_morphism_field_restrictions(tmp_path):
    files.write_builtin_files(str(tmp_path))
    payload = {"algebra": "g1_2_0.json", "order": 1, "terms": [],
               "phi_terms": []}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(ParseError):
        files.load_deformation_file(str(path))


def test_cochain_json_round_trip():
    m = MultilinearMap.from_values(
        2, 3, 2, {(0, 1): (1, 0), (2, 2): (0, -2)})
    payload = files.cochain_to_json(m, ("f1", "f2"))
    again = files.cochain_from_json(payload, ("f1", "f2"))
    assert again == m
    assert all("0" not in e["value"].values() for e in payload["entries"])


def test_builtin_files_are_valid_json(tmp_path):
    written = files.write_builtin_files(str(tmp_path))
    assert written
    for path in written:
        with open(path) as fh:
            json.load(fh)
