import json
import subprocess
import sys
from fractions import Fraction

import pytest

from multjump.cli import main
from multjump.documents import fixture_names


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_monomial_table(capsys):
    code, out, _ = run(capsys, "monomial", "--input", "maximal_ideal_2d", "--bound", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["c", "m(c)", "rho", "class", "polynomial"]
    assert [l.split()[:2] for l in lines[2:]] == [["2", "1"], ["3", "2"]]


def test_monomial_json(capsys):
    code, out, _ = run(capsys, "monomial", "--input", "x3_y2", "--bound", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"c": "5/6", "m": 1, "rho": "1"}]


def test_monomial_json_round_trips(capsys):
    code, out, _ = run(capsys, "monomial", "--input", "x4_y4_z4_xyz", "--format", "json", "--series")
    data = json.loads(out)
    assert code == 0 and set(data) == {"spectrum", "series"}
    cs = [Fraction(row["c"]) for row in data["spectrum"]]
    assert cs == sorted(cs) and max(cs) <= 4
    assert all(str(Fraction(row["c"])) == row["c"] for row in data["spectrum"])


def test_monomial_default_bound_and_zero_candidates(capsys):
    _, plain, _ = run(capsys, "monomial", "--input", "x3_y2", "--format", "csv")
    _, full, _ = run(capsys, "monomial", "--input", "x3_y2", "--format", "csv", "--include-zero-candidates")
    plain_rows = plain.splitlines()[1:]
    assert plain_rows[-1].startswith("3,")
    full_rows = full.splitlines()[1:]
    assert "1/6,0,1,1/6,n" in full_rows
    assert set(plain_rows) <= set(full_rows)


def test_non_cofinite_exits_2(capsys):
    code, _, err = run(capsys, "monomial", "--input", "non_cofinite")
    assert code == 2 and "NotCofinite" in err


def test_surface_example(capsys):
    code, out, _ = run(capsys, "surface", "--input", "x5_plus_y3_y4", "--bound", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["K"] == [1, 2, 4, 7, 8, 9, 10, 11, 12] and data["K_derived"] is True
    assert data["rees_valuations"] == [9]
    assert [r["c"] for r in data["records"]] == ["8/15", "11/15", "13/15", "14/15"]
    assert all(r["E"] == [4] and r["rho"] == "0" for r in data["records"])


def test_surface_table(capsys):
    code, out, _ = run(capsys, "surface", "--input", "single_blowup", "--bound", "4")
    assert code == 0
    assert out.splitlines()[0] == "K = (1)"
    rows = [l.split()[:2] for l in out.splitlines()[5:]]
    assert rows == [["2", "1"], ["3", "2"], ["4", "3"]]


@pytest.mark.parametrize(
    "doc, name",
    [
        ({"matrix": [[1]], "F": [1]}, "NotNegativeDefinite"),
        ({"matrix": [[-2, 1], [1, -1]], "F": [2, 1]}, "NotAntiNef"),
        ({"matrix": [[-1]], "F": [1], "K": [3]}, "AdjunctionMismatch"),
        ({"matrix": [[-3]], "F": [1]}, "NonIntegralCanonical"),
        ({"matrix": [[-1]], "F": [1.5]}, "InputError"),
        ({"generators": [[1, 0], [0]]}, "InputError"),
        ({"generators": [[1, 0], [0, 1]], "dimension": 3}, "InputError"),
        ({"nothing": 1}, "InputError"),
    ],
)
def test_validation_errors_exit_2(tmp_path, capsys, doc, name):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc))
    command = "surface" if "matrix" in doc else "monomial"
    code, _, err = run(capsys, command, "--input", str(path))
    assert code == 2 and name in err


def test_bad_json_and_missing_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(capsys, "monomial", "--input", str(path))[0] == 2
    assert run(capsys, "monomial", "--input", str(tmp_path / "absent.json"))[0] == 2
    assert run(capsys, "monomial", "--input", "x3_y2", "--bound", "one")[0] == 2
    assert run(capsys, "monomial", "--input", "x3_y2", "--bound=-1/2")[0] == 2
    assert run(capsys, "surface", "--input", "x3_y2")[0] == 2


def test_poincare_formats(capsys):
    code, out, _ = run(capsys, "poincare", "--input", "maximal_ideal_2d")
    assert code == 0 and out == "z^2/(1-z)^2\n"
    _, out, _ = run(capsys, "poincare", "--input", "maximal_ideal_2d", "--format", "json")
    data = json.loads(out)
    assert data["ell"] == 1
    assert data["expansion"] == [{"exponent": str(n), "coefficient": str(n - 1)} for n in range(2, 7)]
    _, out, _ = run(capsys, "poincare", "--input", "single_blowup", "--format", "csv", "--bound", "3")
    assert out == "exponent,coefficient\n2,1\n3,2\n"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--input", "x3_y2", "--suite", "hilbert-samuel")
    assert code == 0 and out.startswith("PASS hilbert-samuel") and ": 6, 6, 6" in out
    code, out, _ = run(capsys, "verify", "--input", "x5_plus_y3_y4", "--suite", "positivity")
    assert code == 0 and "Rees set {9}" in out
    code, out, _ = run(capsys, "verify", "--input", "maximal_ideal_2d")
    assert code == 0 and "FAIL" not in out
    code, _, _ = run(capsys, "verify", "--suite", "cross-engine")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--suite", "skoda")
    assert code == 2


def test_verify_reports_failures(monkeypatch, capsys):
    from multjump import verify

    monkeypatch.setattr(verify.MonomialSubject, "hilbert_samuel",
                        lambda self: [verify.Check("hilbert-samuel", "forced", False, "1 != 2")])
    code, out, _ = run(capsys, "verify", "--input", "x3_y2", "--suite", "hilbert-samuel")
    assert code == 1 and out.startswith("FAIL hilbert-samuel: forced: 1 != 2")


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "multjump.cli", "monomial", "--input", "x4_y4_z4_xyz", "--series"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first


@pytest.mark.parametrize("name", sorted(set(fixture_names()) - {"non_cofinite", "positive_definite"}))
def test_every_fixture_verifies(capsys, name):
    code, out, _ = run(capsys, "verify", "--input", name)
    assert code == 0, out
