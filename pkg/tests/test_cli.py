import json
import subprocess
import sys

import pytest

from koszul.cli import run
from koszul.enveloping import element_from_json, parse_element, word_element
from koszul.capelli import capelli_bitableau
from koszul.polynomials import parse_poly, poly_from_json
from koszul.tableaux import Tableau


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_example(capsys):
    code, out, _ = call(
        capsys, "expand", "--type", "capelli", "--n", "4", "--left", "1 2 / 2 4", "--right", "2 3 / 3 4"
    )
    assert code == 0
    expected = capelli_bitableau(Tableau.of([1, 2], [2, 4]), Tableau.of([2, 3], [3, 4]))
    assert parse_element(out) == expected
    code, out_json, _ = call(
        capsys, "expand", "--n", "4", "--left", "1 2 / 2 4", "--right", "2 3 / 3 4", "--format", "json"
    )
    assert element_from_json(json.loads(out_json)) == expected


def test_expand_column_types(capsys):
    code, out, _ = call(capsys, "expand", "--type", "column", "--left", "1 / 2 / 3", "--right", "2 / 1 / 1")
    assert code == 0
    assert out.strip() == "+e[1,1]e[3,1] -e[1,2]e[2,1]e[3,1]"
    code, out, _ = call(capsys, "expand", "--type", "column-star", "--left", "1 2", "--right", "2 1")
    assert out.strip() == "-e[1,1] +e[1,2]e[2,1]"


def test_koszul_from_element_file(tmp_path, capsys):
    element = [
        {"coeff": "-1", "gens": [[1, 2, 1], [2, 1, 1], [3, 1, 1]]},
        {"coeff": "1", "gens": [[1, 1, 1], [3, 1, 1]]},
    ]
    path = tmp_path / "e.json"
    path.write_text(json.dumps(element))
    code, out, _ = call(capsys, "koszul", "--n", "3", "--element-file", str(path))
    assert code == 0
    assert out.strip() == "-(1|2)(2|1)(3|1)"
    code, out, _ = call(capsys, "koszul", "--n", "3", "--element-file", str(path), "--format", "json")
    assert poly_from_json(out) == parse_poly("-(1|2)(2|1)(3|1)")


def test_koszul_rejects_out_of_range_indices(tmp_path, capsys):
    path = tmp_path / "e.txt"
    path.write_text("e[1,4]")
    code, _, err = call(capsys, "koszul", "--n", "3", "--element-file", str(path))
    assert code == 2
    assert "outside" in err


def test_inverse_koszul(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("-(1|2)(2|1)(3|1)")
    code, out, _ = call(capsys, "inverse-koszul", "--element-file", str(path))
    assert code == 0
    assert parse_element(out) == -word_element([(1, 2), (2, 1), (3, 1)]) + word_element([(1, 1), (3, 1)])


def test_central(capsys):
    code, out, _ = call(capsys, "central", "--n", "2")
    assert code == 0 and out.strip() == "+e[1,1] +e[1,1]e[2,2] -e[1,2]e[2,1]"
    code, out, _ = call(capsys, "central", "--n", "3", "--k", "1")
    assert out.strip() == "+e[1,1] +e[2,2] +e[3,3]"
    code, out, _ = call(capsys, "central", "--n", "2", "--shape", "1 1")
    assert code == 0 and out.strip()
    assert call(capsys, "central", "--n", "2", "--k", "3")[0] == 2
    assert call(capsys, "central", "--n", "2", "--shape", "3")[0] == 2
    assert call(capsys, "central", "--n", "2", "--shape", "1 2")[0] == 2


def test_verify_all(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "all", "--n", "2", "--max-degree", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7 and all(line.startswith("PASS") for line in lines)


def test_verify_json_and_suite_selection(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "signs,roundtrip", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [r["name"] for r in data] == ["signs", "roundtrip"]
    assert all(r["passed"] for r in data)
    assert call(capsys, "verify", "--suite", "nonsense")[0] == 2


def test_verify_failure_exit_code(monkeypatch, capsys):
    from koszul import verify

    monkeypatch.setitem(verify.SUITES, "signs", lambda n, d: verify.SuiteResult("signs", False, 1, "boom"))
    code, out, _ = call(capsys, "verify", "--suite", "signs")
    assert code == 1
    assert "FAIL signs" in out and "boom" in out


def test_oracle_check(capsys):
    code, out, _ = call(
        capsys, "oracle-check", "--n", "3", "--type", "star", "--left", "1 2", "--right", "2 3", "--max-degree", "2"
    )
    assert code == 0 and out.startswith("PASS oracle star")
    code, out, _ = call(capsys, "oracle-check", "--n", "2", "--max-degree", "2")
    assert code == 0 and out.startswith("PASS oracle")


def test_basis_count(capsys):
    code, out, _ = call(capsys, "basis-count", "--n", "2", "--max-degree", "2")
    assert code == 0
    assert out.splitlines()[1] == "d=2 standard_pairs=10 costandard_pairs=10 monomials=10 rank=10"


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "--left", "1 2", "--right", "1"],
        ["expand", "--left", "1 x", "--right", "1 2"],
        ["expand", "--n", "2", "--left", "1 3", "--right", "1 2"],
        ["expand", "--left", "1 2"],
        ["central", "--n", "0"],
        ["central"],
        ["central", "--n", "6"],
        ["verify", "--max-degree", "7"],
        ["koszul", "--element-file", "/nonexistent/file"],
        ["inverse-koszul"],
        ["frobnicate"],
        ["expand", "--type", "bogus", "--left", "1", "--right", "1"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_unsafe_sizes_override(capsys):
    code, out, _ = call(capsys, "central", "--n", "6", "--k", "1", "--unsafe-sizes")
    assert code == 0
    assert out.strip() == " ".join(f"+e[{i},{i}]" for i in range(1, 7))


def test_output_is_deterministic():
    argv = [sys.executable, "-m", "koszul.cli", "central", "--n", "3", "--k", "2"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second and first.strip()
