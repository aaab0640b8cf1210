import json

import numpy as np
import pytest

from tenfold import cli, serialize
from tenfold.basespace import FnElement, sample_space
from tenfold.symclass import neutral


def run(args):
    return cli.main(args)


def write_element(path, base, values):
    u = FnElement(base, values)
    path.write_text(json.dumps(serialize.element_to_json(u)))
    return u


@pytest.fixture
def zeta_pair(tmp_path):
    q = sample_space("twopoints", involution="id")
    p = tmp_path / "w.json"
    write_element(p, q, np.stack([np.eye(2, dtype=complex), neutral(0, 1)]))
    return p


def test_classify_roundtrip_deterministic(tmp_path, capsys):
    base = sample_space("circle", 32, "zeta")
    z = base.points[:, 0] + 1j * base.points[:, 1]
    p = tmp_path / "u.json"
    write_element(p, base, z[:, None, None] * np.eye(1))
    assert run(["classify", str(p)]) == 0
    first = capsys.readouterr().out
    assert run(["classify", str(p)]) == 0
    assert capsys.readouterr().out == first
    report = json.loads(first)
    classes = {row["class"]: row for row in report["classes"]}
    assert classes[1]["ok"] and classes[1]["signature"] == {
        "winding": 1, "det_parity": 0}
    assert classes["KU1"]["ok"]


def test_classify_reingests_emitted_element(tmp_path, capsys):
    assert run(["catalog", "--emit", "circle_zeta_k2",
                "--out", str(tmp_path / "w2.json")]) == 0
    assert run(["classify", str(tmp_path / "w2.json")]) == 0
    report = json.loads(capsys.readouterr().out)
    row = [r for r in report["classes"] if r["class"] == 2][0]
    assert row["ok"]
    assert row["signature"] == {"pf_parity": 0, "pf_parity_mid": 1}


def test_classify_membership_failure_exit(tmp_path, capsys):
    base = sample_space("point")
    p = tmp_path / "bad.json"
    write_element(p, base, np.array([[[1.0, 1.0], [0.0, 1.0]]], dtype=complex))
    assert run(["classify", str(p)]) == 2


def test_boundary_command(zeta_pair, tmp_path, capsys):
    out = tmp_path / "res.json"
    code = run(["boundary", str(zeta_pair), "--ses", "circle-zeta",
                "--class", "0", "--out", str(out)])
    assert code == 0
    res = json.loads(out.read_text())
    assert res["class"] == -1
    assert res["signature"] == {"winding_half": 1}


def test_boundary_membership_failure(tmp_path):
    q = sample_space("twopoints", involution="id")
    p = tmp_path / "bad.json"
    write_element(p, q, np.stack([np.eye(2, dtype=complex),
                                  2.0 * np.eye(2, dtype=complex)]))
    assert run(["boundary", str(p), "--ses", "circle-zeta", "--class", "0"]) == 2


def test_boundary_toeplitz(tmp_path, capsys):
    assert run(["catalog", "--emit", "shift_u_k2",
                "--out", str(tmp_path / "v2.json")]) == 0
    code = run(["boundary", str(tmp_path / "v2.json"), "--ses", "toeplitz",
                "--class", "2"])
    assert code == 0
    res = json.loads(capsys.readouterr().out)
    assert res["class"] == 1 and res["signature"] == {"det_parity": 1}


def test_io_error_exit_codes(tmp_path):
    assert run(["classify", str(tmp_path / "missing.json")]) == 4
    bad = tmp_path / "junk.json"
    bad.write_text("{\"not\": \"an element\"}")
    assert run(["classify", str(bad)]) == 4


def test_catalog_listing(capsys):
    assert run(["catalog"]) == 0
    listing = json.loads(capsys.readouterr().out)
    names = {row["name"] for row in listing["entries"]}
    assert "x0" in names and "torus_bott" in names
    assert len(names) >= 24


def test_verify_only_filter(capsys):
    assert run(["verify", "--only", "pfaffian"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("1..1")
    assert "ok 1 - pfaffian" in out


def test_selftest(capsys):
    assert run(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "qc_relation_oracle" in out
