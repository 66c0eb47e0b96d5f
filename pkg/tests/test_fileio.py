"""Round trips, determinism and atomicity of the JSON/CSV serializers."""

import json
import os

import numpy as np
import pytest

from pdslab import fileio
from pdslab.bent import PAryFunction, walsh_spectrum
from pdslab.gf import construct_field
from pdslab.pds import construct_cyclotomic_pds, verify_pds_bruteforce
from pdslab.qform import QuadraticForm, standard_form
from pdslab.scheme import build_cyclotomic_scheme, certify_amorphic

F9 = construct_field(3, 2)


def test_set_roundtrip(tmp_path):
    D, _ = construct_cyclotomic_pds(2, 3, 1, 1, "elliptic", 0)
    path = tmp_path / "d.json"
    fileio.write_set(str(path), D)
    assert fileio.read_set(str(path)) == D
    data = json.loads(path.read_text())
    assert set(data) == {"group", "members"}


def test_set_malformed_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"members": [1, 2]}')
    with pytest.raises(ValueError, match="malformed set"):
        fileio.read_set(str(path))
    path.write_text("[1, 2]")
    with pytest.raises(ValueError, match="expected a JSON object"):
        fileio.read_set(str(path))
    path.write_text("{ nope")
    with pytest.raises(ValueError, match="not valid JSON"):
        fileio.read_json(str(path))


def test_partition_roundtrip(tmp_path):
    part = build_cyclotomic_scheme(2, 3, 1, 1, "elliptic")
    path = tmp_path / "p.json"
    fileio.write_partition(str(path), part)
    back = fileio.read_partition(str(path))
    assert back.group == part.group
    assert all(a == b for a, b in zip(back.classes, part.classes))
    assert back.notes == part.notes


def test_function_roundtrip(tmp_path):
    f = PAryFunction.from_trace_monomial(F9, 2)
    path = tmp_path / "f.json"
    fileio.write_function(str(path), f)
    assert fileio.read_function(str(path)) == f


def test_form_roundtrip_and_entry_encoding(tmp_path):
    Q = standard_form(F9, 2, "elliptic")
    path = tmp_path / "q.json"
    fileio.write_form(str(path), Q)
    back = fileio.read_form(str(path))
    assert back.field == Q.field and back.coeffs == Q.coeffs
    data = json.loads(path.read_text())
    assert data["n"] == 4
    # entries are dlog strings: g^s for the element g^s, "0" for zero
    g = int(F9.antilog[1])
    Q2 = QuadraticForm(F9, [[g, 0], [0, 1]])
    d2 = fileio.form_to_dict(Q2)
    assert d2["matrix"] == [["g^1", "0"], ["0", "g^0"]]
    assert fileio.form_from_dict(d2).coeffs == Q2.coeffs


def test_form_malformed_entry_rejected():
    bad = {"field": F9.descriptor(), "n": 2, "matrix": [["x", "0"], ["0", "g^0"]]}
    with pytest.raises(ValueError, match="malformed form"):
        fileio.form_from_dict(bad)


def test_verification_certificate_shape():
    D, params = construct_cyclotomic_pds(2, 3, 1, 1, "elliptic", 0)
    cert = fileio.verification_to_dict(verify_pds_bruteforce(D))
    assert cert["ok"] and cert["method"] == "bruteforce"
    assert cert["params"] == {"v": 16, "k": 5, "lambda": 0, "mu": 2}
    assert cert["latin"] == {"epsilon": -1, "N": 4, "R": 1}
    assert "witness" not in cert
    s = fileio.dump_json(cert)  # JSON-serializable as-is
    assert json.loads(s) == cert


def test_scheme_certificate_json(tmp_path):
    part = build_cyclotomic_scheme(2, 3, 1, 1, "elliptic")
    cert = certify_amorphic(part)
    data = fileio.scheme_certificate_to_dict(cert)
    text = fileio.dump_json(data)
    back = json.loads(text)
    assert back["amorphic"] is True and back["epsilon"] == -1
    assert np.array(back["p_tensor"]).shape == (4, 4, 4)
    assert len(back["fusion_reports"]) == 5
    assert all(r["ok"] for r in back["class_reports"])


def test_spectrum_dict():
    sp = walsh_spectrum(PAryFunction.from_trace_monomial(F9, 2))
    data = fileio.spectrum_to_dict(sp)
    assert data["classification"] == "bent_regular" and data["u"] == -1
    assert len(data["coefficients"]) == 9
    assert all(set(c) == {"p", "coeffs"} for c in data["coefficients"])
    json.dumps(data)


def test_dump_json_sorted_and_newline():
    text = fileio.dump_json({"b": 1, "a": [2, 3]})
    assert text.index('"a"') < text.index('"b"') and text.endswith("\n")


def test_atomic_write_leaves_no_temp_files(tmp_path):
    path = tmp_path / "out.json"
    fileio.atomic_write_text(str(path), "hello\n")
    assert path.read_text() == "hello\n"
    assert os.listdir(tmp_path) == ["out.json"]


def test_edge_list_matches_difference_structure(tmp_path):
    D, params = construct_cyclotomic_pds(2, 3, 1, 1, "hyperbolic", 0)
    lines = fileio.edge_list_lines(D)
    assert len(lines) == 16 * params.k // 2
    G = D.group
    for line in lines:
        u, v = map(int, line.split())
        assert u < v and D.contains(G.sub(u, v))
    rows = fileio.adjacency_csv_lines(D)
    A = np.array([[int(x) for x in r.split(",")] for r in rows])
    assert (A == A.T).all() and (A.sum(axis=1) == params.k).all()
    path = tmp_path / "g.edges"
    fileio.write_edge_list(str(path), D)
    assert path.read_text().splitlines() == lines
