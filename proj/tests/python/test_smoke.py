"""Smoke tests for the python bindings."""

import json

import pytest

qlab = pytest.importorskip("qlab")


def test_counts():
    assert qlab.gaussian_binomial(4, 2, 2) == "35"
    assert qlab.gaussian_binomial(2, 1, 2) == "3"
    assert qlab.subspace_count(2, 2) == "5"
    assert qlab.lagrangian_count(2, 2) == "15"
    assert qlab.lagrangian_count(4, 2) == "2295"
    assert qlab.qbracket_gauss(3, 3) == "13"


def test_errors_surface_as_exceptions():
    with pytest.raises(qlab.QlabError):
        qlab.gaussian_binomial(1, 2, 2)


def test_suite_names():
    names = qlab.suite_names()
    assert "quotient" in names
    assert names[-1] == "all"


def test_run_suite_quotient():
    ok, text = qlab.run_suite("quotient", n=2, q=2)
    assert ok
    report = json.loads(text)
    assert report["schema"] == "qlab-report/1"
    assert report["summary"]["fail"] == 0
    assert any("quotient identity" in c["name"] or "Y zeta" in c["name"]
               for c in report["checks"])


def test_run_suite_dict_and_determinism():
    r1 = qlab.run_suite_dict("hamming", n=3)
    r2 = qlab.run_suite_dict("hamming", n=3)
    assert r1 == r2
    assert r1["ok"]


def test_skip_window():
    ok, text = qlab.run_suite("ws-decomp", q=7)
    assert ok  # skips only
    report = json.loads(text)
    assert report["summary"]["skip"] >= 1
    assert report["summary"]["pass"] == 0


def test_matrix_roundtrip():
    text = qlab.lattice_operator_json(1, 2, op="Y")
    assert json.loads(text)["schema"] == "qlab-matrix/1"
    assert qlab.matrix_roundtrip(text) == text


def test_dual_polar_labels():
    labels = qlab.dual_polar_labels(1, 2)
    assert len(labels) == 3
    assert len(set(labels)) == 3


def test_cube_matrix():
    text = qlab.cube_matrix_json(2, 2)
    mat = json.loads(text)
    # 4 vertices, 8 directed cover pairs with nonzero weight
    assert len(mat["row_labels"]) == 4
    assert len(mat["entries"]) == 8
