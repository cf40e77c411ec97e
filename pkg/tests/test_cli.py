"""The command-line surface: subcommands, formats, exit codes."""

import json

import pytest

from qschur.cli import main, suite_registry
from qschur.laurent import ONE
from qschur.mixed import (MixedElem, rational_bideterminant,
                          standard_rational_bitableaux)

EXPECTED_SUITES = ["pbw", "laplace", "centrality", "hecke-relations",
                   "walled-relations", "kernel-Y", "jacobi", "detk",
                   "straightening-lemmas", "bijection", "rational-basis",
                   "phi-iota", "bicommute", "kappa-equivariance",
                   "weight-projectors", "schur-weyl"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_suite_registry():
    assert suite_registry() == EXPECTED_SUITES
    assert "schur-weyl" in suite_registry()


def test_tableaux_rational_count(capsys):
    code, out = run(capsys, "tableaux", "--rational",
                    "--n", "2", "--r", "1", "--s", "1")
    assert code == 0
    assert json.loads(out)["count"] == 4


def test_tableaux_ordinary(capsys):
    code, out = run(capsys, "tableaux", "--n", "2", "--m", "2")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 4  # shapes (2) and (1,1) with entries <= 2


def test_dims_reports_four_way_agreement(capsys):
    code, out = run(capsys, "dims", "--n", "2", "--r", "1", "--s", "1")
    assert code == 0
    report = json.loads(out)
    assert report["ok"]
    assert report["commutant_dim"] == report["image_dim"] == \
        report["rational_bitableaux"] == report["coeff_quotient_dim"] == 10


def test_basis_counts(capsys):
    code, out = run(capsys, "basis", "ord", "--n", "2", "--m", "2")
    assert code == 0 and json.loads(out)["count"] == 10
    code, out = run(capsys, "basis", "mixed",
                    "--n", "2", "--r", "1", "--s", "1")
    assert code == 0 and json.loads(out)["count"] == 10


def test_straighten_ord_roundtrip(tmp_path, capsys):
    elem = [{"word": [[2, 1], [1, 2]], "coeff": {"0": "1"}}]
    path = tmp_path / "elem.json"
    path.write_text(json.dumps(elem))
    code, out = run(capsys, "straighten", "ord", "--n", "2",
                    "--input", str(path))
    assert code == 0
    report = json.loads(out)
    assert len(report["terms"]) == 2  # -q (12|12) + q (1/2 | 1/2) pattern


def test_straighten_mixed(tmp_path, capsys):
    elem = MixedElem({(((1, 1),), ((1, 1),)): ONE}, normalized=True)
    path = tmp_path / "elem.json"
    path.write_text(json.dumps(elem.to_json()))
    code, out = run(capsys, "straighten", "mixed", "--n", "2",
                    "--r", "1", "--s", "1", "--input", str(path))
    assert code == 0
    assert json.loads(out)["terms"]


def test_iota_reports_neg_q_form_on_basis_element(tmp_path, capsys):
    n, r, s = 2, 1, 1
    k, rt, rt2 = standard_rational_bitableaux(n, r, s)[0]
    b = rational_bideterminant(rt, rt2, k, n)
    path = tmp_path / "elem.json"
    path.write_text(json.dumps(b.to_json()))
    code, out = run(capsys, "iota", "--n", "2", "--r", "1", "--s", "1",
                    "--input", str(path))
    assert code == 0
    report = json.loads(out)
    assert len(report["terms"]) == 1
    assert "neg_q_exponent" in report


def test_verify_single_suite(capsys):
    code, out = run(capsys, "verify", "bijection")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and report["suites"][0]["suite"] == "bijection"


def test_verify_with_parameter_restriction(capsys):
    code, out = run(capsys, "verify", "jacobi", "--n", "3")
    assert code == 0
    report = json.loads(out)
    cases = report["suites"][0]["cases"]
    assert [c["n"] for c in cases] == [3]


def test_unknown_suite_exits_2(capsys):
    assert main(["verify", "nosuchsuite"]) == 2


def test_caps_enforced(capsys):
    assert main(["dims", "--n", "9", "--r", "1", "--s", "1"]) == 2
    assert main(["tableaux", "--n", "2", "--m", "9"]) == 2


def test_missing_parameters_exit_2(capsys):
    assert main(["dims", "--n", "2"]) == 2


def test_csv_format(capsys):
    code, out = run(capsys, "tableaux", "--n", "2", "--m", "2",
                    "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",") == sorted(("rows", "shape"))
    assert len(lines) == 5


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["dims", "--n", "2", "--r", "1", "--s", "1",
                 "--output", str(path)])
    assert code == 0
    assert json.loads(path.read_text())["ok"]


def test_verify_output_deterministic_modulo_timing(capsys):
    _, out1 = run(capsys, "verify", "bijection")
    _, out2 = run(capsys, "verify", "bijection")
    r1, r2 = json.loads(out1), json.loads(out2)
    for rep in (r1, r2):
        for suite in rep["suites"]:
            suite.pop("elapsed_ms")
    assert r1 == r2
