import pathlib

import pytest

import schurkit


def test_catalog_lists():
    assert "cyclic" in schurkit.catalog_families()
    assert len(schurkit.default_catalog()) >= 12


def test_analyze_heisenberg():
    rep = schurkit.analyze("catalog:heisenberg_mod:3")
    assert rep["structure"]["order"] == 27
    assert rep["structure"]["nilpotency_class"] == 2


def test_presentation_text_round_trip():
    text = schurkit.presentation("catalog:dihedral:8")
    assert schurkit.analyze(text)["structure"]["order"] == 8


def test_tensor_square_known_values():
    d8 = schurkit.tensor_square("catalog:dihedral:8")["result"]
    assert d8["tensor_order"] == 32
    assert d8["multiplier_invariants"] == [2]
    q8 = schurkit.tensor_square("catalog:quaternion:8")["result"]
    assert q8["tensor_order"] == 64
    assert q8["multiplier_order"] == 1


def test_tensor_square_checks():
    rep = schurkit.tensor_square("catalog:abelian:2,2", checks=True)
    assert rep["checks"]
    assert all(c["passed"] for c in rep["checks"])


def test_budget_raises():
    with pytest.raises(schurkit.ResourceError):
        schurkit.tensor_square("catalog:heisenberg_mod:3", budget=10)


def test_parse_error():
    with pytest.raises(schurkit.ParseError):
        schurkit.analyze("gens two")
    assert issubclass(schurkit.ParseError, schurkit.Error)


def test_missing_file():
    with pytest.raises(schurkit.IoError):
        schurkit.analyze(pathlib.Path("/nonexistent/group.pc"))


def test_file_input(tmp_path):
    f = tmp_path / "v4.pc"
    f.write_text("gens 2\norders 2 2\n")
    assert schurkit.tensor_square(f)["result"]["tensor_order"] == 16


def test_identities_and_collect():
    reps = schurkit.verify_identities("sq: (a*b)^2 == [a,[b,a]] [b,a] a^2 b^2 @ class 3\n")
    assert len(reps) == 1 and reps[0]["all_equal"]
    assert schurkit.collect("(a*b)^2", ["a", "b"], 3) == schurkit.collect("[a,[b,a]] [b,a] a^2 b^2", ["a", "b"], 3)
    assert schurkit.collect("a*b*a^-1*b^-1", ["a", "b"], 2) != schurkit.collect("a*b", ["a", "b"], 2)


def test_scan_rows():
    rep = schurkit.scan(["catalog:cyclic:4", "catalog:dihedral:8", "gens 2\norders 2\n"], checks=False)
    assert rep["summary"]["rows"] == 3
    assert rep["summary"]["rejected"] == 1
    assert rep["summary"]["red_alerts"] == 0
